//! Named commands behind a common trait, looked up by name at run time.

mod cover;
mod duality;
mod tuple;

use higgs_cover::cover::ChartFamily;
use higgs_cover::higgs::{check_commuting, HiggsTuple};
use higgs_cover::seed::derive_seed;
use serde_json::Value;

use crate::config::JobConfig;
use crate::error::{exit, CliError};
use crate::input::{InputBody, InputDocument};

pub struct Context<'a> {
    pub config: &'a JobConfig,
    pub input: &'a InputDocument,
}

pub struct Outcome {
    pub payload: Value,
    pub verdict: Option<&'static str>,
    pub status: i32,
}

impl Outcome {
    pub fn ok(payload: Value) -> Self {
        Outcome {
            payload,
            verdict: None,
            status: exit::OK,
        }
    }

    pub fn judged(payload: Value, pass: bool) -> Self {
        Outcome {
            payload,
            verdict: Some(if pass { "pass" } else { "fail" }),
            status: if pass { exit::OK } else { exit::VERIFICATION_FAILED },
        }
    }
}

pub trait Command: Send + Sync {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn run(&self, ctx: &Context) -> Result<Outcome, CliError>;
}

pub struct Registry {
    commands: Vec<Box<dyn Command>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry { commands: Vec::new() }
    }

    pub fn standard() -> Self {
        let mut r = Registry::empty();
        r.register(Box::new(tuple::Check));
        r.register(Box::new(tuple::Spectrum));
        r.register(Box::new(tuple::Pencil));
        r.register(Box::new(tuple::Residuals));
        r.register(Box::new(duality::DualVerify));
        r.register(Box::new(duality::Hitchin));
        r.register(Box::new(cover::Sweep));
        r.register(Box::new(cover::Ramify));
        r
    }

    pub fn register(&mut self, cmd: Box<dyn Command>) {
        assert!(self.get(cmd.name()).is_none(), "duplicate command {}", cmd.name());
        self.commands.push(cmd);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Command> {
        self.commands.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.commands.iter().map(|c| c.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Command> {
        self.commands.iter().map(|c| c.as_ref())
    }
}

impl Context<'_> {
    fn seed(&self, tag: &str) -> u64 {
        derive_seed(self.config.seed, tag, 0)
    }

    fn matrices(&self) -> Result<&[higgs_cover::matkernel::Matrix], CliError> {
        match &self.input.body {
            InputBody::Matrices(m) => Ok(m),
            InputBody::Family(_) => Err(CliError::field(
                "family",
                format!("command {} needs a \"matrices\" document", self.config.command),
            )),
        }
    }

    /// The input tuple. Non-commuting input is rejected unless `--force`.
    fn tuple(&self) -> Result<HiggsTuple, CliError> {
        let mats = self.matrices()?.to_vec();
        let tol = self.config.tolerances.commute;
        if self.config.force {
            Ok(HiggsTuple::new_unchecked(mats, tol)?)
        } else {
            Ok(HiggsTuple::new(mats, tol)?)
        }
    }

    /// The input family; a matrix document becomes a constant family.
    /// Families failing the commutativity precheck are rejected unless `--force`.
    fn family(&self) -> Result<ChartFamily, CliError> {
        let fam = match &self.input.body {
            InputBody::Family(f) => f.clone(),
            InputBody::Matrices(m) => ChartFamily::constant(m, self.input.label.clone())?,
        };
        if !self.config.force {
            let report = fam.precheck(self.seed("precheck"), self.config.tolerances.commute)?;
            if !report.pass {
                return Err(CliError::field(
                    "family",
                    format!(
                        "family components do not commute (relative commutator {:e} > {:e}); pass --force to sweep anyway",
                        report.max_commutator, report.tol
                    ),
                ));
            }
        }
        Ok(fam)
    }

    fn grid(&self) -> Result<&higgs_cover::cover::GridSpec, CliError> {
        self.config
            .grid
            .as_ref()
            .ok_or_else(|| CliError::field("grid", format!("command {} requires --grid", self.config.command)))
    }
}

fn commuting_payload(ctx: &Context) -> Result<Outcome, CliError> {
    match &ctx.input.body {
        InputBody::Matrices(m) => {
            let r = check_commuting(m, ctx.config.tolerances.commute)?;
            let pass = r.pass;
            Ok(Outcome::judged(serde_json::to_value(r).expect("serializable"), pass))
        }
        InputBody::Family(f) => {
            let r = f.precheck(ctx.seed("precheck"), ctx.config.tolerances.commute)?;
            let pass = r.pass;
            Ok(Outcome::judged(serde_json::to_value(r).expect("serializable"), pass))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_registry_has_every_command() {
        let r = Registry::standard();
        assert_eq!(
            r.names(),
            ["check", "spectrum", "pencil", "residuals", "dual-verify", "hitchin", "sweep", "ramify"]
        );
        assert!(r.get("nope").is_none());
        assert!(r.iter().all(|c| !c.about().is_empty()));
    }

    #[test]
    #[should_panic(expected = "duplicate")]
    fn duplicate_names_are_rejected() {
        let mut r = Registry::standard();
        r.register(Box::new(tuple::Check));
    }
}
