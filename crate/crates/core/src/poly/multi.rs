use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::{PolyError, UniPoly};
use crate::C64;

/// Coefficients below this fraction of the largest one are dropped.
pub const PRUNE_REL: f64 = 1e-12;

/// Exponent vector. Ordered so that iteration runs in descending graded-lex
/// order: `x0^2 < x0·x1 < x1^2` under this `Ord`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn evaluate(&self, x: &[C64]) -> C64 {
        self.0
            .iter()
            .zip(x)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, &xi)| xi.powu(e))
            .product()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `binom(degree + num_vars − 1, degree)`.
pub fn monomial_count(num_vars: usize, degree: u32) -> usize {
    let k = degree as u128;
    let n = num_vars as u128;
    if n == 0 {
        return usize::from(degree == 0);
    }
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * (n + i) / (i + 1);
    }
    c as usize
}

/// All exponent vectors of the given total degree, in canonical order.
pub fn all_monomials(num_vars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Monomial>) {
        if slots == 1 {
            prefix.push(left);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(prefix, left - e, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(monomial_count(num_vars, degree));
    if num_vars == 0 {
        return out;
    }
    rec(&mut Vec::with_capacity(num_vars), degree, num_vars, &mut out);
    out
}

#[derive(serde::Serialize)]
struct TermView<'a> {
    exponents: &'a [u32],
    coefficient: &'a C64,
}

/// Sparse homogeneous polynomial over C.
///
/// Serializes as `{num_vars, degree, terms: [{exponents, coefficient}]}`
/// with terms in graded-lex order.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly {
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, C64>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermView> = self
            .terms
            .iter()
            .map(|(m, c)| TermView {
                exponents: &m.0,
                coefficient: c,
            })
            .collect();
        let mut st = s.serialize_struct("MultiPoly", 3)?;
        st.serialize_field("num_vars", &self.num_vars)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl MultiPoly {
    pub fn zero(num_vars: usize, degree: u32) -> Self {
        assert!(num_vars > 0, "polynomial needs at least one variable");
        MultiPoly {
            num_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds from `(exponents, coefficient)` pairs; duplicates are summed and
    /// the result is pruned.
    pub fn from_terms<I>(num_vars: usize, degree: u32, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, C64)>,
    {
        let mut p = MultiPoly::zero(num_vars, degree);
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(PolyError::LengthMismatch {
                    expected: num_vars,
                    got: e.len(),
                });
            }
            let m = Monomial(e);
            if m.degree() != degree {
                return Err(PolyError::NotHomogeneous {
                    expected: degree,
                    got: m.degree(),
                    exponents: m.0,
                });
            }
            if !c.is_finite() {
                return Err(PolyError::NonFinite);
            }
            *p.terms.entry(m).or_insert(C64::new(0.0, 0.0)) += c;
        }
        Ok(p.pruned(PRUNE_REL))
    }

    /// `Σ_i a_i x_i`.
    pub fn linear_form(coeffs: &[C64]) -> Self {
        let n = coeffs.len();
        let terms = coeffs.iter().enumerate().map(|(i, &c)| {
            let mut e = vec![0; n];
            e[i] = 1;
            (e, c)
        });
        MultiPoly::from_terms(n, 1, terms).expect("linear form is homogeneous")
    }

    /// The constant polynomial `c` (degree 0).
    pub fn constant(num_vars: usize, c: C64) -> Self {
        MultiPoly::from_terms(num_vars, 0, [(vec![0; num_vars], c)]).expect("constant")
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u32]) -> C64 {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .copied()
            .unwrap_or(C64::new(0.0, 0.0))
    }

    pub fn max_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Drops coefficients with `|c| < rel · max|c|` (and exact zeros).
    pub fn pruned(mut self, rel: f64) -> Self {
        let cut = rel * self.max_coeff();
        self.terms.retain(|_, c| c.norm() > cut && c.norm() > 0.0);
        self
    }

    pub fn scale(&self, s: C64) -> Self {
        let terms = self.terms.iter().map(|(m, &c)| (m.clone(), c * s)).collect();
        MultiPoly {
            terms,
            ..self.clone()
        }
        .pruned(0.0)
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<Self, PolyError> {
        if self.num_vars != other.num_vars {
            return Err(PolyError::LengthMismatch {
                expected: self.num_vars,
                got: other.num_vars,
            });
        }
        let mut out: BTreeMap<Monomial, C64> = BTreeMap::new();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                *out.entry(Monomial(e)).or_insert(C64::new(0.0, 0.0)) += ca * cb;
            }
        }
        Ok(MultiPoly {
            num_vars: self.num_vars,
            degree: self.degree + other.degree,
            terms: out,
        }
        .pruned(PRUNE_REL))
    }

    /// Largest coefficient difference divided by the larger of the two
    /// maximal coefficients (0 when both are zero).
    pub fn relative_distance(&self, other: &MultiPoly) -> f64 {
        let mut diff = 0.0f64;
        for (m, &c) in &self.terms {
            diff = diff.max((c - other.coeff(&m.0)).norm());
        }
        for (m, &c) in &other.terms {
            if !self.terms.contains_key(m) {
                diff = diff.max(c.norm());
            }
        }
        let scale = self.max_coeff().max(other.max_coeff());
        if scale == 0.0 {
            0.0
        } else {
            diff / scale
        }
    }

    fn check_len(&self, len: usize) -> Result<(), PolyError> {
        if len != self.num_vars {
            Err(PolyError::LengthMismatch {
                expected: self.num_vars,
                got: len,
            })
        } else {
            Ok(())
        }
    }

    pub fn evaluate(&self, x: &[C64]) -> Result<C64, PolyError> {
        self.check_len(x.len())?;
        Ok(self.terms.iter().map(|(m, &c)| c * m.evaluate(x)).sum())
    }

    /// Partial derivatives `∂p/∂x_i`, each of degree `degree − 1`.
    pub fn gradient(&self) -> Result<Vec<MultiPoly>, PolyError> {
        if self.degree == 0 {
            return Err(PolyError::DegreeTooLow {
                op: "gradient",
                degree: 0,
                required: 1,
            });
        }
        Ok((0..self.num_vars)
            .map(|i| {
                let mut terms = BTreeMap::new();
                for (m, &c) in &self.terms {
                    let e = m.0[i];
                    if e == 0 {
                        continue;
                    }
                    let mut ex = m.0.clone();
                    ex[i] -= 1;
                    terms.insert(Monomial(ex), c * f64::from(e));
                }
                MultiPoly {
                    num_vars: self.num_vars,
                    degree: self.degree - 1,
                    terms,
                }
            })
            .collect())
    }

    /// Gradient evaluated at a point without materializing the partials.
    pub fn gradient_at(&self, x: &[C64]) -> Result<Vec<C64>, PolyError> {
        self.check_len(x.len())?;
        let mut g = vec![C64::new(0.0, 0.0); self.num_vars];
        for (m, &c) in &self.terms {
            for i in 0..self.num_vars {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                let mut v = c * f64::from(e);
                for (j, (&ej, &xj)) in m.0.iter().zip(x).enumerate() {
                    let p = if j == i { ej - 1 } else { ej };
                    if p > 0 {
                        v *= xj.powu(p);
                    }
                }
                g[i] += v;
            }
        }
        Ok(g)
    }

    /// `t ↦ p(base + t·dir)`.
    pub fn restrict_to_line(&self, base: &[C64], dir: &[C64]) -> Result<UniPoly, PolyError> {
        self.check_len(base.len())?;
        self.check_len(dir.len())?;
        if dir.iter().all(|z| z.norm() == 0.0) {
            return Err(PolyError::ZeroDirection);
        }
        let deg = self.degree as usize;
        // powers[i][e] = (base_i + t·dir_i)^e as dense coefficient vectors
        let powers: Vec<Vec<Vec<C64>>> = (0..self.num_vars)
            .map(|i| {
                let maxe = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0) as usize;
                let mut table = vec![vec![C64::new(1.0, 0.0)]];
                for e in 1..=maxe {
                    let prev = &table[e - 1];
                    let mut next = vec![C64::new(0.0, 0.0); prev.len() + 1];
                    for (k, &c) in prev.iter().enumerate() {
                        next[k] += c * base[i];
                        next[k + 1] += c * dir[i];
                    }
                    table.push(next);
                }
                table
            })
            .collect();
        let mut out = vec![C64::new(0.0, 0.0); deg + 1];
        let mut bound = vec![0.0f64; deg + 1];
        for (m, &c) in &self.terms {
            let mut acc = vec![c];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let f = &powers[i][e as usize];
                let mut next = vec![C64::new(0.0, 0.0); acc.len() + f.len() - 1];
                for (a, &x) in acc.iter().enumerate() {
                    for (b, &y) in f.iter().enumerate() {
                        next[a + b] += x * y;
                    }
                }
                acc = next;
            }
            for (k, v) in acc.into_iter().enumerate() {
                out[k] += v;
                bound[k] += v.norm();
            }
        }
        // Cancellation down to rounding level means the coefficient is zero.
        for (o, b) in out.iter_mut().zip(&bound) {
            if o.norm() <= 64.0 * f64::EPSILON * b {
                *o = C64::new(0.0, 0.0);
            }
        }
        Ok(UniPoly::new(out))
    }

    /// One term per line, `e0 e1 … ed : re im`, graded-lex order.
    pub fn to_canonical_text(&self) -> String {
        let mut s = String::new();
        for (m, c) in &self.terms {
            let exps: Vec<String> = m.0.iter().map(u32::to_string).collect();
            let _ = writeln!(s, "{} : {} {}", exps.join(" "), c.re, c.im);
        }
        s
    }

    /// Inverse of [`MultiPoly::to_canonical_text`]. `num_vars` and `degree`
    /// are inferred from the first term unless the text is empty, in which
    /// case the supplied fallbacks are used.
    pub fn parse_canonical_text(
        text: &str,
        fallback_vars: usize,
        fallback_degree: u32,
    ) -> Result<Self, PolyError> {
        let mut terms = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line.split_once(':').ok_or_else(|| PolyError::Parse {
                line: line_no,
                message: "missing ':' separator".into(),
            })?;
            let exps = lhs
                .split_whitespace()
                .map(|t| t.parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| PolyError::Parse {
                    line: line_no,
                    message: format!("bad exponent: {e}"),
                })?;
            let parts: Vec<&str> = rhs.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(PolyError::Parse {
                    line: line_no,
                    message: format!("expected 're im', got {} fields", parts.len()),
                });
            }
            let parse = |t: &str| {
                t.parse::<f64>().map_err(|e| PolyError::Parse {
                    line: line_no,
                    message: format!("bad coefficient '{t}': {e}"),
                })
            };
            terms.push((exps, C64::new(parse(parts[0])?, parse(parts[1])?)));
        }
        let (nv, deg) = match terms.first() {
            Some((e, _)) => (e.len(), e.iter().sum()),
            None => (fallback_vars, fallback_degree),
        };
        let mut p = MultiPoly::zero(nv, deg);
        for (e, c) in terms {
            if e.len() != nv || e.iter().sum::<u32>() != deg {
                return Err(PolyError::NotHomogeneous {
                    expected: deg,
                    got: e.iter().sum(),
                    exponents: e,
                });
            }
            p.terms.insert(Monomial(e), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn diff_of_squares() -> MultiPoly {
        MultiPoly::from_terms(2, 2, [(vec![2, 0], c(1.0)), (vec![0, 2], c(-1.0))]).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let p = diff_of_squares();
        assert_eq!(p.evaluate(&[c(1.0), c(1.0)]).unwrap(), c(0.0));
        assert_eq!(p.evaluate(&[c(2.0), c(1.0)]).unwrap(), c(3.0));
        let q = MultiPoly::from_terms(3, 2, [(vec![1, 1, 0], c(1.0)), (vec![0, 0, 2], c(1.0))])
            .unwrap();
        assert_eq!(q.evaluate(&[c(1.0), c(2.0), c(3.0)]).unwrap(), c(11.0));
        assert!(matches!(
            q.evaluate(&[c(1.0)]),
            Err(PolyError::LengthMismatch { expected: 3, got: 1 })
        ));
    }

    #[test]
    fn gradient_examples() {
        let g = diff_of_squares().gradient().unwrap();
        assert_eq!(g[0], MultiPoly::from_terms(2, 1, [(vec![1, 0], c(2.0))]).unwrap());
        assert_eq!(g[1], MultiPoly::from_terms(2, 1, [(vec![0, 1], c(-2.0))]).unwrap());

        let p = MultiPoly::from_terms(2, 2, [(vec![1, 1], c(1.0))]).unwrap();
        let g = p.gradient().unwrap();
        assert_eq!(g[0], MultiPoly::from_terms(2, 1, [(vec![0, 1], c(1.0))]).unwrap());
        assert_eq!(g[1], MultiPoly::from_terms(2, 1, [(vec![1, 0], c(1.0))]).unwrap());

        let cube = MultiPoly::from_terms(3, 3, [(vec![3, 0, 0], c(1.0))]).unwrap();
        let g = cube.gradient().unwrap();
        assert_eq!(g[0], MultiPoly::from_terms(3, 2, [(vec![2, 0, 0], c(3.0))]).unwrap());
        assert!(g[1].is_zero() && g[2].is_zero());

        let k = MultiPoly::constant(2, c(4.0));
        assert!(matches!(k.gradient(), Err(PolyError::DegreeTooLow { .. })));
    }

    #[test]
    fn restrict_examples() {
        let p = diff_of_squares();
        assert!(p.restrict_to_line(&[c(0.0), c(0.0)], &[c(1.0), c(1.0)]).unwrap().is_zero());
        let q = p.restrict_to_line(&[c(1.0), c(0.0)], &[c(0.0), c(1.0)]).unwrap();
        assert_eq!(q, UniPoly::new(vec![c(1.0), c(0.0), c(-1.0)]));
        let xy = MultiPoly::from_terms(2, 2, [(vec![1, 1], c(1.0))]).unwrap();
        let q = xy.restrict_to_line(&[c(1.0), c(1.0)], &[c(1.0), c(-1.0)]).unwrap();
        assert_eq!(q, UniPoly::new(vec![c(1.0), c(0.0), c(-1.0)]));
        assert!(matches!(
            p.restrict_to_line(&[c(1.0), c(0.0)], &[c(0.0), c(0.0)]),
            Err(PolyError::ZeroDirection)
        ));
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let ms = all_monomials(3, 2);
        let exps: Vec<&[u32]> = ms.iter().map(|m| m.exponents()).collect();
        assert_eq!(
            exps,
            vec![
                &[2, 0, 0][..],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 2, 0],
                &[0, 1, 1],
                &[0, 0, 2]
            ]
        );
        let mut sorted = ms.clone();
        sorted.sort();
        assert_eq!(sorted, ms);
        assert_eq!(monomial_count(5, 6), 210);
        assert_eq!(monomial_count(3, 0), 1);
    }

    #[test]
    fn non_homogeneous_terms_rejected() {
        let err = MultiPoly::from_terms(2, 2, [(vec![1, 0], c(1.0))]).unwrap_err();
        assert!(matches!(err, PolyError::NotHomogeneous { .. }));
    }

    #[test]
    fn pruning_is_relative() {
        let p = MultiPoly::from_terms(2, 1, [(vec![1, 0], c(1.0)), (vec![0, 1], c(1e-13))]).unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn canonical_text_round_trip() {
        let p = MultiPoly::from_terms(
            3,
            2,
            [
                (vec![0, 0, 2], C64::new(0.1, -3.5)),
                (vec![2, 0, 0], c(1.0)),
                (vec![1, 1, 0], C64::new(-2.0e-7, 1e3)),
            ],
        )
        .unwrap();
        let text = p.to_canonical_text();
        assert!(text.starts_with("2 0 0 : 1 0\n"));
        let back = MultiPoly::parse_canonical_text(&text, 3, 2).unwrap();
        assert_eq!(back, p);
        assert!(matches!(
            MultiPoly::parse_canonical_text("1 1 : 1", 2, 2),
            Err(PolyError::Parse { line: 1, .. })
        ));
    }
}
