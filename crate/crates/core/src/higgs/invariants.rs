use super::{HiggsError, HiggsTuple};
use crate::matkernel::{determinant, hessenberg, Matrix};
use crate::poly::UniPoly;
use crate::C64;

/// `det(w·I − a)` as a monic polynomial in `w`.
///
/// Reduces to Hessenberg form and expands the leading principal minors
/// with the Hessenberg recurrence, which needs no eigenvalues.
pub fn characteristic_polynomial(a: &Matrix) -> Result<UniPoly, HiggsError> {
    let n = a.require_square("characteristic_polynomial")?;
    let h = hessenberg(a)?;
    let zero = C64::new(0.0, 0.0);
    // p[k] = det(w·I − H[..k, ..k]), dense, constant term first
    let mut p: Vec<Vec<C64>> = vec![vec![C64::new(1.0, 0.0)]];
    for k in 1..=n {
        let mut next = vec![zero; k + 1];
        let diag = h.get(k - 1, k - 1);
        for (i, &c) in p[k - 1].iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * diag;
        }
        let mut sub_prod = C64::new(1.0, 0.0);
        for i in (1..k).rev() {
            sub_prod *= h.get(i, i - 1);
            let f = h.get(i - 1, k - 1) * sub_prod;
            if f == zero {
                continue;
            }
            for (j, &c) in p[i - 1].iter().enumerate() {
                next[j] -= f * c;
            }
        }
        p.push(next);
    }
    Ok(UniPoly::new(p.pop().expect("n >= 1")))
}

/// `det(w·I − Σ_j v_j Φ_j)`.
pub fn char_poly_direction(h: &HiggsTuple, v: &[C64]) -> Result<UniPoly, HiggsError> {
    characteristic_polynomial(&h.contract(v)?)
}

/// Trace of `a` on the `m`-th exterior power: the sum of the `m × m`
/// principal minors, i.e. the `m`-th elementary symmetric function of the
/// eigenvalues. Costs `C(n, m)` determinants.
pub fn exterior_trace(a: &Matrix, m: usize) -> Result<C64, HiggsError> {
    let n = a.require_square("exterior_trace")?;
    if m > n {
        return Err(HiggsError::OutOfRange { m, n });
    }
    if m == 0 {
        return Ok(C64::new(1.0, 0.0));
    }
    let mut idx: Vec<usize> = (0..m).collect();
    let mut total = C64::new(0.0, 0.0);
    loop {
        let minor = Matrix::from_fn(m, m, |r, c| a.get(idx[r], idx[c]));
        total += determinant(&minor)?;
        // next m-subset of 0..n in lexicographic order
        let Some(k) = (0..m).rev().find(|&k| idx[k] < n - m + k) else {
            break;
        };
        idx[k] += 1;
        for j in k + 1..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(total)
}

/// `Tr (ι_vΦ)^i` for `i = 1..=max_i`.
pub fn power_traces(h: &HiggsTuple, v: &[C64], max_i: usize) -> Result<Vec<C64>, HiggsError> {
    let a = h.contract(v)?;
    let mut acc = a.clone();
    let mut out = Vec::with_capacity(max_i);
    for i in 1..=max_i {
        if i > 1 {
            acc = &acc * &a;
        }
        out.push(acc.trace());
    }
    Ok(out)
}
