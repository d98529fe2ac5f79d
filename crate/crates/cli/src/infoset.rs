use rayon::prelude::*;
use rm_infoset::modular::{crt_iso, enumerate_isos, GroupIso};
use rm_infoset::reed_muller::{
    factorizations, info_set_generic, info_set_rm, RMCode, RMFactorization, RMInfoSet,
};
use serde::Serialize;

use crate::args::{Format, InfosetArgs, IsoChoice};
use crate::error::{CliError, Result};
use crate::verify::{Verification, Verifier};

/// Validated settings of an `infoset` run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub m: u32,
    pub rho: u32,
    pub r1: Option<u64>,
    pub iso: IsoChoice,
    pub format: Format,
    pub verify: bool,
    pub generic: bool,
}

impl RunConfig {
    pub fn new(m: u32, rho: u32) -> Self {
        RunConfig {
            m,
            rho,
            r1: None,
            iso: IsoChoice::Crt,
            format: Format::Json,
            verify: false,
            generic: false,
        }
    }

    /// Orders other than 1 and 2 always take the generic pipeline.
    pub fn uses_generic(&self) -> bool {
        self.generic || !(1..=2).contains(&self.rho)
    }

    fn code(&self) -> Result<RMCode> {
        Ok(RMCode::new(self.m, self.rho)?)
    }

    /// Factorizations the run iterates over, by increasing `r1`.
    pub fn factorizations(&self) -> Result<Vec<RMFactorization>> {
        let closed_second_order = self.rho == 2 && !self.uses_generic();
        let facts = match self.r1 {
            Some(r1) => {
                let fact = RMFactorization::new(self.m, r1)?;
                if closed_second_order && !fact.is_mersenne() {
                    return Err(CliError::NoFactorization {
                        m: self.m,
                        rho: self.rho,
                    });
                }
                vec![fact]
            }
            None => factorizations(self.m, if closed_second_order { 2 } else { 1 }),
        };
        if facts.is_empty() {
            return Err(CliError::NoFactorization {
                m: self.m,
                rho: self.rho,
            });
        }
        Ok(facts)
    }

    pub fn isos(&self, fact: &RMFactorization) -> Result<Vec<GroupIso>> {
        let (r1, r2) = (fact.r1(), fact.r2());
        Ok(match self.iso {
            IsoChoice::Crt => vec![crt_iso(r1, r2)?],
            IsoChoice::All => enumerate_isos(r1, r2)?,
            IsoChoice::Delta(d1, d2) => vec![GroupIso::new(r1, r2, d1, d2)?],
        })
    }
}

impl TryFrom<&InfosetArgs> for RunConfig {
    type Error = CliError;

    fn try_from(a: &InfosetArgs) -> Result<Self> {
        let config = RunConfig {
            m: a.m,
            rho: a.rho,
            r1: a.r1,
            iso: a.iso,
            format: a.format,
            verify: a.verify,
            generic: a.generic,
        };
        config.code()?;
        Ok(config)
    }
}

/// One emitted set, with its verdict when verification was requested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfosetRow {
    #[serde(flatten)]
    pub set: RMInfoSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip)]
    pub verification: Option<Verification>,
}

/// Every requested set, in factorization order and then isomorphism order.
pub fn cmd_infoset(config: &RunConfig) -> Result<Vec<InfosetRow>> {
    let code = config.code()?;
    let mut jobs = Vec::new();
    for fact in config.factorizations()? {
        for t in config.isos(&fact)? {
            jobs.push((fact, t));
        }
    }
    let verifier = if config.verify {
        Some(Verifier::new(config.m, config.rho)?)
    } else {
        None
    };
    jobs.par_iter()
        .map(|(fact, t)| {
            let set = if config.uses_generic() {
                info_set_generic(&code, fact, t)?
            } else {
                info_set_rm(&code, fact, t)?
            };
            let verification = verifier.as_ref().map(|v| v.check(&set)).transpose()?;
            Ok(InfosetRow {
                set,
                verified: verification.map(|v| v.holds()),
                verification,
            })
        })
        .collect()
}

/// The first row whose verification failed, described for the error stream.
pub fn first_failure(rows: &[InfosetRow]) -> Option<String> {
    rows.iter().find_map(|row| {
        let v = row.verification?;
        (!v.holds()).then(|| {
            let s = &row.set;
            format!(
                "R({}, {}) with r1 = {}, T(1) = ({},{}): info set {}, dual info set {}, check set {}",
                s.rho, s.m, s.r1, s.iso[0], s.iso[1], v.info_set, v.dual_info_set, v.check_set
            )
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crt_default() {
        let rows = cmd_infoset(&RunConfig::new(4, 1)).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].set.exponents(), vec![0, 1, 6, 10]);
        assert_eq!(rows[0].verified, None);
    }

    #[test]
    fn factorization_errors() {
        let err = cmd_infoset(&RunConfig::new(11, 2)).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let mut c = RunConfig::new(8, 2);
        c.r1 = Some(5);
        assert_eq!(cmd_infoset(&c).unwrap_err().exit_code(), 2);
        c.r1 = Some(7);
        assert_eq!(cmd_infoset(&c).unwrap_err().exit_code(), 2);
        c.generic = true;
        c.r1 = Some(5);
        assert_eq!(cmd_infoset(&c).unwrap().len(), 1);
    }

    #[test]
    fn higher_orders_go_generic() {
        let mut c = RunConfig::new(6, 3);
        c.verify = true;
        let rows = cmd_infoset(&c).unwrap();
        assert!(c.uses_generic());
        assert_eq!(rows[0].set.info_set.len(), 42);
        assert_eq!(rows[0].verified, Some(true));
    }

    #[test]
    fn explicit_isomorphism() {
        let mut c = RunConfig::new(4, 1);
        c.iso = IsoChoice::Delta(2, 3);
        assert_eq!(
            cmd_infoset(&c).unwrap()[0].set.exponents(),
            vec![0, 2, 5, 12]
        );
        c.iso = IsoChoice::Delta(3, 1);
        assert!(cmd_infoset(&c).is_err());
    }
}
