//! Logarithmic good reduction of genus-1 curves.
//!
//! A genus-1 curve `C` of period `m` over the fraction field has log good
//! reduction iff
//! (a) inertia acts tamely on `H^1`, and
//! (b) if `p | m`, the Jacobian has good reduction and the minimal regular
//! model is cohomologically flat.
//! Cohomological flatness is equivalent to `m = mu`, where `mu` is the order
//! of the normal bundle class of the reduced fibre.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::prime::Prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Reduction {
    Good,
    Multiplicative,
    Additive,
}

impl FromStr for Reduction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "good" => Ok(Reduction::Good),
            "mult" | "multiplicative" => Ok(Reduction::Multiplicative),
            "add" | "additive" => Ok(Reduction::Additive),
            _ => Err(Error::InvalidInput(format!(
                "unknown reduction type `{s}` (expected good, mult or add)"
            ))),
        }
    }
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reduction::Good => "good",
            Reduction::Multiplicative => "multiplicative",
            Reduction::Additive => "additive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Genus1Input {
    pub p: Prime,
    /// Order of the class of `C` in `H^1(K, Jac C)`; equal to the index.
    pub period: u64,
    pub h1_tame: bool,
    pub jacobian: Reduction,
    pub coh_flat: Option<bool>,
    pub mu: Option<u64>,
    pub supersingular: Option<bool>,
}

/// `m` is the gcd of the fibre multiplicities, `mu` the order of
/// `O(D)|_E` in `Pic E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NumericCriterion {
    pub m: u64,
    pub mu: u64,
    pub p: Prime,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Gate {
    Ok,
    Violation(String),
}

impl Gate {
    pub fn is_ok(&self) -> bool {
        matches!(self, Gate::Ok)
    }
}

/// `mu` must divide `m` with `m / mu` a power of `p`.
pub fn validate_numeric(c: NumericCriterion) -> Gate {
    if c.m == 0 || c.mu == 0 {
        return Gate::Violation("m and mu must be >= 1".into());
    }
    if !c.m.is_multiple_of(c.mu) {
        return Gate::Violation(format!("mu = {} does not divide m = {}", c.mu, c.m));
    }
    let ratio = c.m / c.mu;
    if !c.p.is_power(ratio) {
        return Gate::Violation(format!("m / mu = {ratio} is not a power of {}", c.p));
    }
    Gate::Ok
}

/// The model is log smooth at some point of the special fibre iff `m = mu`.
pub fn somewhere_log_smooth(c: NumericCriterion) -> Result<bool> {
    match validate_numeric(c) {
        Gate::Ok => Ok(c.m == c.mu),
        Gate::Violation(msg) => Err(Error::NumericInvalid(msg)),
    }
}

/// Default for the tameness flag where it is automatic: for `p >= 5`,
/// inertia acts tamely on `H^1` when the Jacobian has good or
/// multiplicative reduction. `None` means the caller must decide.
pub fn h1_tame_default(p: Prime, jacobian: Reduction) -> Option<bool> {
    (p.get() >= 5 && jacobian != Reduction::Additive).then_some(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Genus1Verdict {
    pub log_good_reduction: bool,
    pub reason: String,
}

impl Genus1Verdict {
    fn new(yes: bool, reason: impl Into<String>) -> Self {
        Genus1Verdict {
            log_good_reduction: yes,
            reason: reason.into(),
        }
    }
}

/// Cohomological flatness as given, or derived from `mu`; errors if the
/// two encodings disagree or `mu` fails the numeric gate.
fn flatness(input: &Genus1Input) -> Result<Option<bool>> {
    let from_mu = match input.mu {
        None => None,
        Some(mu) => {
            let c = NumericCriterion {
                m: input.period,
                mu,
                p: input.p,
            };
            if let Gate::Violation(msg) = validate_numeric(c) {
                return Err(Error::Inconsistent(format!("period and mu: {msg}")));
            }
            Some(input.period == mu)
        }
    };
    match (input.coh_flat, from_mu) {
        (Some(a), Some(b)) if a != b => Err(Error::Inconsistent(format!(
            "coh_flat = {a} but period {} {} mu {}",
            input.period,
            if b { "=" } else { "!=" },
            input.mu.unwrap()
        ))),
        (a, b) => Ok(a.or(b)),
    }
}

pub fn decide(input: &Genus1Input) -> Result<Genus1Verdict> {
    if input.period == 0 {
        return Err(Error::InvalidInput("period must be >= 1".into()));
    }
    let flat = flatness(input)?;
    if !input.h1_tame {
        return Ok(Genus1Verdict::new(
            false,
            "inertia acts wildly on H^1, so condition (a) fails",
        ));
    }
    if !input.p.divides(input.period) {
        return Ok(Genus1Verdict::new(
            true,
            format!(
                "H^1 is tame and the period {} is prime to p = {}",
                input.period, input.p
            ),
        ));
    }
    if input.jacobian != Reduction::Good {
        return Ok(Genus1Verdict::new(
            false,
            format!(
                "p divides the period and the Jacobian has {} (bad) reduction",
                input.jacobian
            ),
        ));
    }
    match flat {
        None => Err(Error::MissingData(
            "p divides the period and the Jacobian has good reduction: \
             coh_flat or mu is required"
                .into(),
        )),
        Some(true) => Ok(Genus1Verdict::new(
            true,
            "H^1 is tame, p divides the period, the Jacobian has good reduction \
             and the model is cohomologically flat",
        )),
        Some(false) => Ok(Genus1Verdict::new(
            false,
            "p divides the period and the Jacobian has good reduction, \
             but the model is not cohomologically flat",
        )),
    }
}

/// `m = mu` forces the reduced fibre to be ordinary; flags inputs that
/// claim `m = mu` with a supersingular Jacobian.
pub fn ordinarity_gate(input: &Genus1Input) -> Result<Gate> {
    let (Some(mu), Some(ss)) = (input.mu, input.supersingular) else {
        return Err(Error::NotApplicable(
            "the ordinarity check needs both mu and supersingular".into(),
        ));
    };
    if !input.p.divides(input.period) || input.jacobian != Reduction::Good {
        return Err(Error::NotApplicable(
            "the ordinarity check applies only when p divides the period and the \
             Jacobian has good reduction"
                .into(),
        ));
    }
    Ok(if input.period == mu && ss {
        Gate::Violation(format!(
            "period = mu = {mu} forces an ordinary fibre, but the Jacobian is supersingular"
        ))
    } else {
        Gate::Ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn crit(m: u64, mu: u64, q: u64) -> NumericCriterion {
        NumericCriterion { m, mu, p: p(q) }
    }

    fn input(q: u64, period: u64, tame: bool, jac: Reduction) -> Genus1Input {
        Genus1Input {
            p: p(q),
            period,
            h1_tame: tame,
            jacobian: jac,
            coh_flat: None,
            mu: None,
            supersingular: None,
        }
    }

    #[test]
    fn numeric_gate_examples() {
        assert!(validate_numeric(crit(4, 4, 2)).is_ok());
        assert!(validate_numeric(crit(4, 2, 2)).is_ok());
        assert!(!validate_numeric(crit(4, 3, 2)).is_ok());
        assert!(!validate_numeric(crit(6, 2, 2)).is_ok());
    }

    #[test]
    fn somewhere_smooth_examples() {
        for q in [2, 3, 5] {
            assert!(somewhere_log_smooth(crit(q, q, q)).unwrap());
            assert!(!somewhere_log_smooth(crit(q * q, q, q)).unwrap());
        }
        assert!(somewhere_log_smooth(crit(3, 3, 2)).unwrap());
        assert!(matches!(somewhere_log_smooth(crit(4, 3, 2)), Err(Error::NumericInvalid(_))));
    }

    #[test]
    fn decide_examples() {
        assert!(decide(&input(2, 3, true, Reduction::Multiplicative)).unwrap().log_good_reduction);
        assert!(!decide(&input(2, 2, true, Reduction::Multiplicative)).unwrap().log_good_reduction);
        let mut i = input(2, 2, true, Reduction::Good);
        i.coh_flat = Some(true);
        assert!(decide(&i).unwrap().log_good_reduction);
        for jac in [Reduction::Good, Reduction::Multiplicative, Reduction::Additive] {
            for period in [1, 2, 3, 4] {
                let mut i = input(2, period, false, jac);
                i.coh_flat = Some(true);
                assert!(!decide(&i).unwrap().log_good_reduction);
            }
        }
    }

    #[test]
    fn decide_errors() {
        let i = input(3, 3, true, Reduction::Good);
        assert!(matches!(decide(&i), Err(Error::MissingData(_))));
        let mut i = input(3, 3, true, Reduction::Good);
        i.coh_flat = Some(false);
        i.mu = Some(3);
        assert!(matches!(decide(&i), Err(Error::Inconsistent(_))));
        let mut i = input(3, 3, true, Reduction::Good);
        i.mu = Some(2);
        assert!(matches!(decide(&i), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn mu_encodes_flatness() {
        let mut i = input(2, 4, true, Reduction::Good);
        i.mu = Some(4);
        assert!(decide(&i).unwrap().log_good_reduction);
        i.mu = Some(2);
        assert!(!decide(&i).unwrap().log_good_reduction);
    }

    #[test]
    fn ordinarity_examples() {
        for q in [2, 3, 5] {
            let mut i = input(q, q, true, Reduction::Good);
            i.mu = Some(q);
            i.supersingular = Some(false);
            assert!(ordinarity_gate(&i).unwrap().is_ok());
            i.supersingular = Some(true);
            assert!(!ordinarity_gate(&i).unwrap().is_ok());
            i.mu = Some(1);
            assert!(ordinarity_gate(&i).unwrap().is_ok());
        }
        let i = input(2, 3, true, Reduction::Good);
        assert!(matches!(ordinarity_gate(&i), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn tame_default() {
        assert_eq!(h1_tame_default(p(5), Reduction::Good), Some(true));
        assert_eq!(h1_tame_default(p(7), Reduction::Multiplicative), Some(true));
        assert_eq!(h1_tame_default(p(5), Reduction::Additive), None);
        assert_eq!(h1_tame_default(p(3), Reduction::Good), None);
    }

    #[test]
    fn reduction_parsing() {
        assert_eq!("good".parse::<Reduction>().unwrap(), Reduction::Good);
        assert_eq!("mult".parse::<Reduction>().unwrap(), Reduction::Multiplicative);
        assert_eq!("add".parse::<Reduction>().unwrap(), Reduction::Additive);
        assert!("bad".parse::<Reduction>().is_err());
    }
}
