//! Log regular models presented as a Kato fan with Euler characteristics of
//! the open strata, and the invariants computed from them: the tame
//! monodromy zeta function, the tame Euler characteristic, existence of
//! tamely ramified points, and the restrictions log smoothness imposes on
//! the `p`-locus.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::{classify, KatoFan, LocusPartition};
use crate::prime::Prime;
use crate::report::{Rule, Violation};
use crate::zeta::ZetaFunction;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumData {
    pub point_id: String,
    /// Euler characteristic of the open stratum `U`.
    pub chi_open: i64,
    /// Dimension of the closed stratum `V`.
    pub dim_closed: u32,
    pub genus: Option<u32>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LogModel {
    fan: KatoFan,
    strata: BTreeMap<String, StratumData>,
    p: Prime,
    log_smooth_claimed: bool,
}

impl LogModel {
    pub fn new(
        fan: KatoFan,
        strata: Vec<StratumData>,
        p: Prime,
        log_smooth_claimed: bool,
    ) -> Result<Self> {
        fan.ensure_valid()
            .map_err(|e| Error::InvalidModel(e.to_string()))?;
        let mut map = BTreeMap::new();
        for s in strata {
            if fan.point(&s.point_id).is_none() {
                return Err(Error::InvalidModel(format!(
                    "stratum data for unknown point `{}`",
                    s.point_id
                )));
            }
            let id = s.point_id.clone();
            if map.insert(id.clone(), s).is_some() {
                return Err(Error::InvalidModel(format!("duplicate stratum data for `{id}`")));
            }
        }
        for pt in fan.points() {
            let Some(s) = map.get(&pt.id) else {
                return Err(Error::InvalidModel(format!("no stratum data for point `{}`", pt.id)));
            };
            if s.dim_closed == 0 && s.chi_open != 1 {
                return Err(Error::InvalidModel(format!(
                    "point `{}`: a 0-dimensional stratum has chi_open = 1, found {}",
                    pt.id, s.chi_open
                )));
            }
            if s.dim_closed == 1 && !fan.has_boundary(&pt.id) {
                if let Some(g) = s.genus {
                    let expected = 2 - 2 * i64::from(g);
                    if s.chi_open != expected {
                        return Err(Error::InvalidModel(format!(
                            "point `{}`: a closed genus-{g} curve without boundary has \
                             chi_open = {expected}, found {}",
                            pt.id, s.chi_open
                        )));
                    }
                }
            }
        }
        Ok(LogModel {
            fan,
            strata: map,
            p,
            log_smooth_claimed,
        })
    }

    pub fn fan(&self) -> &KatoFan {
        &self.fan
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn log_smooth_claimed(&self) -> bool {
        self.log_smooth_claimed
    }

    pub fn stratum(&self, id: &str) -> &StratumData {
        &self.strata[id]
    }

    pub fn strata(&self) -> impl Iterator<Item = &StratumData> {
        self.strata.values()
    }

    pub fn partition(&self) -> LocusPartition {
        classify(&self.fan, self.p).expect("fan validated at construction")
    }

    /// Codimension-1 points with their multiplicity and `chi(U)`.
    fn divisors(&self) -> impl Iterator<Item = (&str, u64, i64)> {
        self.fan
            .points()
            .iter()
            .filter(|pt| pt.codim == 1)
            .map(|pt| (pt.id.as_str(), pt.msharp, self.strata[&pt.id].chi_open))
    }
}

/// Largest divisor of `msharp` prime to `p`.
pub fn m_prime(msharp: u64, p: Prime) -> u64 {
    p.strip(msharp)
}

/// `prod over codimension-1 points of (t^{m'} - 1)^{-chi(U)}`.
pub fn tame_zeta(model: &LogModel) -> ZetaFunction {
    let mut z = ZetaFunction::one();
    for (_, m, chi) in model.divisors() {
        z.multiply_factor(m_prime(m, model.p), -chi);
    }
    z
}

/// `sum over codimension-1 points of m' * chi(U)`, checked against the
/// degree of [`tame_zeta`].
pub fn tame_euler(model: &LogModel) -> Result<i64> {
    let mut total: i128 = 0;
    for (_, m, chi) in model.divisors() {
        total += i128::from(m_prime(m, model.p)) * i128::from(chi);
    }
    let degree = tame_zeta(model).degree();
    if total != -degree {
        return Err(Error::Internal(format!(
            "tame Euler characteristic {total} differs from minus the zeta degree {}",
            -degree
        )));
    }
    i64::try_from(total).map_err(|_| Error::Overflow("tame Euler characteristic"))
}

/// A tamely ramified point exists iff some stratum of the special fibre
/// lies in the `p'`-locus.
pub fn tame_point_exists(model: &LogModel) -> bool {
    model
        .fan
        .points()
        .iter()
        .any(|pt| !pt.is_generic() && !model.p.divides(pt.msharp))
}

/// Sum of `chi(U)` over the `p`-locus.
pub fn p_locus_euler(model: &LogModel) -> i64 {
    model
        .fan
        .points()
        .iter()
        .filter(|pt| !pt.is_generic() && model.p.divides(pt.msharp))
        .map(|pt| model.strata[&pt.id].chi_open)
        .sum()
}

fn require_log_smooth(model: &LogModel) -> Result<()> {
    if model.log_smooth_claimed {
        Ok(())
    } else {
        Err(Error::NotApplicable(
            "the model is not claimed to be log smooth".into(),
        ))
    }
}

/// On a log smooth model every `p`-locus stratum has `chi(U) = 0`. One
/// violation per offending point.
pub fn check_prop_vanishing(model: &LogModel) -> Result<Vec<Violation>> {
    require_log_smooth(model)?;
    let mut out = Vec::new();
    for pt in model.fan.points() {
        if pt.is_generic() || !model.p.divides(pt.msharp) {
            continue;
        }
        let chi = model.strata[&pt.id].chi_open;
        if chi != 0 {
            out.push(Violation::new(
                Rule::PLocusEuler,
                pt.id.clone(),
                format!(
                    "p-locus stratum (msharp {}) has chi(U) = {chi}, but log smoothness forces 0",
                    pt.msharp
                ),
            ));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RestrictionReport {
    pub violations: Vec<Violation>,
    /// Conditions that hold in theory but cannot be checked from this data.
    pub advisories: Vec<String>,
}

/// Shape of a log smooth model without tame points: no 0-dimensional
/// closed strata, 1-dimensional ones are genus-1 curves, 2-dimensional ones
/// are not of general type (reported as an advisory only).
pub fn check_degeneration_restrictions(model: &LogModel) -> Result<RestrictionReport> {
    require_log_smooth(model)?;
    if tame_point_exists(model) {
        return Err(Error::NotApplicable(
            "the model has a tame point; the restrictions only concern models without one".into(),
        ));
    }
    let mut report = RestrictionReport::default();
    for pt in model.fan.points().iter().filter(|pt| !pt.is_generic()) {
        let s = &model.strata[&pt.id];
        match s.dim_closed {
            0 => report.violations.push(Violation::new(
                Rule::ZeroDimensionalStratum,
                pt.id.clone(),
                "closed stratum is a point, impossible without tame points",
            )),
            1 => match s.genus {
                Some(1) => {}
                Some(g) => report.violations.push(Violation::new(
                    Rule::StratumGenus,
                    pt.id.clone(),
                    format!("closed stratum is a curve of genus {g}, must be genus 1"),
                )),
                None => report.advisories.push(format!(
                    "{}: curve stratum without genus data; it must have genus 1",
                    pt.id
                )),
            },
            2 => report.advisories.push(format!(
                "{}: surface stratum must not be of general type (not checkable here)",
                pt.id
            )),
            _ => {}
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EulerCriterionStatus {
    /// Nonzero Euler characteristic and a tame point, as required.
    Consistent,
    /// The Euler characteristic vanishes; no conclusion.
    Silent,
    /// Nonzero Euler characteristic without a tame point: the data cannot
    /// come from a log smooth model.
    InconsistentInput,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerCriterionReport {
    pub chi_tame: i64,
    pub tame_point_exists: bool,
    pub status: EulerCriterionStatus,
}

/// On a log smooth model a nonzero Euler characteristic forces a tame
/// point. Checks that implication on the data.
pub fn tame_point_criterion(model: &LogModel) -> Result<EulerCriterionReport> {
    require_log_smooth(model)?;
    let chi_tame = tame_euler(model)?;
    let exists = tame_point_exists(model);
    let status = match (chi_tame != 0, exists) {
        (false, _) => EulerCriterionStatus::Silent,
        (true, true) => EulerCriterionStatus::Consistent,
        (true, false) => EulerCriterionStatus::InconsistentInput,
    };
    Ok(EulerCriterionReport {
        chi_tame,
        tame_point_exists: exists,
        status,
    })
}
