//! Kato fans: the specialization poset of strata of a log regular model,
//! each point carrying its multiplicity `m#` and optionally a monoid chart.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{content, cyclic_quotient_torsion, fmt_vec, is_zero_vec, IntVec, Lattice};
use crate::monoid::{AffineMonoid, Face};
use crate::prime::Prime;
use crate::report::{Rule, Violation};

/// A local chart `N -> P` around a stratum: the monoid `P`, the element
/// `v1` mapping to the uniformizer, and the face `P \ q` cut out by the
/// stratum's point.
#[derive(Debug, Clone, PartialEq)]
pub struct Chart {
    monoid: AffineMonoid,
    v1: IntVec,
    face: Face,
    /// The caller asserts the induced map to the toric model is étale.
    etale_marked: bool,
}

impl Chart {
    pub fn new(monoid: AffineMonoid, v1: IntVec, face: Face, etale_marked: bool) -> Result<Self> {
        if v1.len() != monoid.ambient_dim() {
            return Err(Error::InvalidChart(format!(
                "v1 {} does not have ambient dimension {}",
                fmt_vec(&v1),
                monoid.ambient_dim()
            )));
        }
        if !monoid.member(&v1)? {
            return Err(Error::InvalidChart(format!(
                "v1 {} is not in the chart monoid",
                fmt_vec(&v1)
            )));
        }
        monoid.check_face(&face).map_err(|e| match e {
            Error::InvalidFace(msg) => Error::InvalidChart(format!("invalid face: {msg}")),
            other => other,
        })?;
        Ok(Chart {
            monoid,
            v1,
            face,
            etale_marked,
        })
    }

    pub fn monoid(&self) -> &AffineMonoid {
        &self.monoid
    }

    pub fn v1(&self) -> &[BigInt] {
        &self.v1
    }

    pub fn face(&self) -> &Face {
        &self.face
    }

    pub fn etale_marked(&self) -> bool {
        self.etale_marked
    }

    /// The sharp quotient `P / face` and the class of `v1` in it.
    pub fn localized(&self) -> Result<(AffineMonoid, IntVec)> {
        self.monoid.localize_sharpen(&self.face, &self.v1)
    }

    /// `m#` of the chart's point: the maximal divisibility of the image of
    /// `v1` in the sharp quotient.
    pub fn msharp(&self) -> Result<BigInt> {
        let (q, image) = self.localized()?;
        if is_zero_vec(&image) {
            return Err(Error::InvalidChart(
                "v1 maps to 0 in the sharp quotient (only the generic point has this)".into(),
            ));
        }
        q.max_divisibility(&image)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FanPoint {
    pub id: String,
    /// 0 for the generic point.
    pub codim: u32,
    pub msharp: u64,
    pub chart: Option<Chart>,
}

impl FanPoint {
    pub fn new(id: impl Into<String>, codim: u32, msharp: u64) -> Self {
        FanPoint {
            id: id.into(),
            codim,
            msharp,
            chart: None,
        }
    }

    pub fn with_chart(mut self, chart: Chart) -> Self {
        self.chart = Some(chart);
        self
    }

    pub fn is_generic(&self) -> bool {
        self.codim == 0
    }
}

/// Specialization poset of fan points. A pair `(a, b)` means `b` lies in
/// the closure of the stratum of `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct KatoFan {
    points: Vec<FanPoint>,
    specializations: Vec<(String, String)>,
    index: HashMap<String, usize>,
}

impl KatoFan {
    /// Checks ids and multiplicities only; the poset axioms are reported by
    /// [`KatoFan::structural_violations`].
    pub fn new(points: Vec<FanPoint>, specializations: Vec<(String, String)>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if p.id.is_empty() {
                return Err(Error::InvalidFan("empty point id".into()));
            }
            if index.insert(p.id.clone(), i).is_some() {
                return Err(Error::InvalidFan(format!("duplicate point id `{}`", p.id)));
            }
            if p.msharp == 0 {
                return Err(Error::InvalidFan(format!("point `{}`: msharp ≥ 1 violated", p.id)));
            }
        }
        for (a, b) in &specializations {
            for id in [a, b] {
                if !index.contains_key(id) {
                    return Err(Error::InvalidFan(format!(
                        "specialization mentions unknown point `{id}`"
                    )));
                }
            }
        }
        Ok(KatoFan {
            points,
            specializations,
            index,
        })
    }

    pub fn points(&self) -> &[FanPoint] {
        &self.points
    }

    pub fn specializations(&self) -> &[(String, String)] {
        &self.specializations
    }

    pub fn point(&self, id: &str) -> Option<&FanPoint> {
        self.index.get(id).map(|&i| &self.points[i])
    }

    pub fn generic(&self) -> Option<&FanPoint> {
        let mut it = self.points.iter().filter(|p| p.is_generic());
        match (it.next(), it.next()) {
            (Some(g), None) => Some(g),
            _ => None,
        }
    }

    /// Points strictly below `id` in the specialization order.
    pub fn closure_below(&self, id: &str) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut stack = vec![id.to_string()];
        while let Some(cur) = stack.pop() {
            for (a, b) in &self.specializations {
                if *a == cur && out.insert(b.clone()) {
                    stack.push(b.clone());
                }
            }
        }
        out.remove(id);
        out
    }

    /// Does the closed stratum of `id` have nonempty boundary?
    pub fn has_boundary(&self, id: &str) -> bool {
        self.specializations.iter().any(|(a, _)| a == id)
    }

    /// Violations of the poset axioms: a unique generic point with `m# = 1`,
    /// codimension strictly increasing along specializations, and every
    /// point reachable from the generic point.
    pub fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let generic: Vec<&FanPoint> = self.points.iter().filter(|p| p.is_generic()).collect();
        if generic.len() != 1 {
            out.push(Violation::new(
                Rule::FanStructure,
                "fan",
                format!("expected exactly one codimension-0 point, found {}", generic.len()),
            ));
        }
        for g in &generic {
            if g.msharp != 1 {
                out.push(Violation::new(
                    Rule::GenericMultiplicity,
                    g.id.clone(),
                    format!("generic point must have msharp 1, found {}", g.msharp),
                ));
            }
        }
        for (a, b) in &self.specializations {
            let (pa, pb) = (self.point(a).unwrap(), self.point(b).unwrap());
            if pb.codim <= pa.codim {
                out.push(Violation::new(
                    Rule::FanStructure,
                    format!("{a} -> {b}"),
                    format!(
                        "codimension must increase along a specialization ({} -> {})",
                        pa.codim, pb.codim
                    ),
                ));
            }
        }
        if let [g] = generic.as_slice() {
            let reachable = self.closure_below(&g.id);
            for p in &self.points {
                if !p.is_generic() && !reachable.contains(&p.id) {
                    out.push(Violation::new(
                        Rule::FanStructure,
                        p.id.clone(),
                        "not reachable from the generic point",
                    ));
                }
            }
        }
        out
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        match self.structural_violations().first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidFan(format!("{}: {}", v.subject, v.detail))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocusPartition {
    pub p_locus: BTreeSet<String>,
    pub pprime_locus: BTreeSet<String>,
}

/// Splits the fan into points whose `m#` is divisible by `p` and the rest.
pub fn classify(fan: &KatoFan, p: Prime) -> Result<LocusPartition> {
    fan.ensure_valid()?;
    let mut part = LocusPartition {
        p_locus: BTreeSet::new(),
        pprime_locus: BTreeSet::new(),
    };
    for pt in fan.points() {
        if !pt.is_generic() && p.divides(pt.msharp) {
            part.p_locus.insert(pt.id.clone());
        } else {
            part.pprime_locus.insert(pt.id.clone());
        }
    }
    Ok(part)
}

/// Every inconsistency in the fan data: poset axioms, the closedness of the
/// `p'`-locus (if a point is in the `p`-locus then so is every non-generic
/// point specializing to it), and charts whose recomputed `m#` disagrees
/// with the declared one.
pub fn validate_fan(fan: &KatoFan, p: Prime) -> Vec<Violation> {
    let mut out = fan.structural_violations();

    for a in fan.points().iter().filter(|pt| !pt.is_generic()) {
        for b in fan.closure_below(&a.id) {
            let b = fan.point(&b).unwrap();
            if b.is_generic() {
                continue;
            }
            if p.divides(b.msharp) && !p.divides(a.msharp) {
                out.push(Violation::new(
                    Rule::LocusMonotonicity,
                    format!("{} -> {}", a.id, b.id),
                    format!(
                        "{} (msharp {}) is in the p-locus but its generization {} (msharp {}) is not",
                        b.id, b.msharp, a.id, a.msharp
                    ),
                ));
            }
        }
    }

    for pt in fan.points() {
        let Some(chart) = &pt.chart else { continue };
        if pt.is_generic() {
            continue;
        }
        match chart.msharp() {
            Ok(m) => {
                if m != BigInt::from(pt.msharp) {
                    out.push(Violation::new(
                        Rule::MsharpMismatch,
                        pt.id.clone(),
                        format!("declared msharp {} but the chart gives {m}", pt.msharp),
                    ));
                }
            }
            Err(e) => out.push(Violation::new(Rule::ChartInvalid, pt.id.clone(), e.to_string())),
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Smoothness {
    Smooth,
    NotSmooth,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmoothnessVerdict {
    pub status: Smoothness,
    pub reason: String,
}

/// Log smoothness at the stratum of a chart.
///
/// `p'`-locus points are always smooth. On the `p`-locus the answer is only
/// combinatorial for an étale-marked chart, where smoothness fails exactly
/// when `v1` is divisible by `p` in `P^gp`.
pub fn chart_log_smooth(chart: &Chart, p: Prime) -> Result<SmoothnessVerdict> {
    let m = chart.msharp()?;
    let pb = BigInt::from(p.get());
    if !m.is_multiple_of(&pb) {
        return Ok(SmoothnessVerdict {
            status: Smoothness::Smooth,
            reason: format!("p'-locus point: msharp {m} is prime to {p}"),
        });
    }
    if !chart.etale_marked() {
        return Ok(SmoothnessVerdict {
            status: Smoothness::Unknown,
            reason: "p-locus point; smoothness is the vanishing locus of a canonical log 1-form, \
                     not determined by combinatorics alone"
                .into(),
        });
    }
    let c = content(chart.v1(), chart.monoid().lattice())?
        .ok_or_else(|| Error::InvalidChart("v1 = 0".into()))?;
    if c.is_multiple_of(&pb) {
        Ok(SmoothnessVerdict {
            status: Smoothness::NotSmooth,
            reason: format!("v1 has content {c} in P^gp: the cokernel of N^gp -> P^gp has {p}-torsion"),
        })
    } else {
        Ok(SmoothnessVerdict {
            status: Smoothness::Smooth,
            reason: format!("v1 has content {c} in P^gp, prime to {p}"),
        })
    }
}

/// Does `L / <v1>` have an element of order `p`? Computed from the content
/// of `v1` and, independently, from Smith forms; the two must agree.
pub fn torsion_has_p(v1: &[BigInt], lattice: &Lattice, p: Prime) -> Result<bool> {
    let pb = BigInt::from(p.get());
    let c = content(v1, lattice)?
        .ok_or_else(|| Error::InvalidInput("torsion of L/<0> is not cyclic-quotient torsion".into()))?;
    let by_content = c.is_multiple_of(&pb);
    let by_snf = cyclic_quotient_torsion(v1, lattice)?
        .iter()
        .any(|d| d.is_multiple_of(&pb));
    if by_content != by_snf {
        return Err(Error::Internal(format!(
            "content ({c}) and Smith form torsion disagree for {}",
            fmt_vec(v1)
        )));
    }
    Ok(by_content)
}

/// `m#` recomputed from a chart, as a machine integer.
pub fn chart_msharp_u64(chart: &Chart) -> Result<u64> {
    chart.msharp()?.to_u64().ok_or(Error::Overflow("msharp"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int_vec;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn specialization(a: &str, b: &str) -> (String, String) {
        (a.to_string(), b.to_string())
    }

    fn fan(points: &[(&str, u32, u64)], pairs: &[(&str, &str)]) -> KatoFan {
        KatoFan::new(
            points.iter().map(|&(id, c, m)| FanPoint::new(id, c, m)).collect(),
            pairs.iter().map(|&(a, b)| specialization(a, b)).collect(),
        )
        .unwrap()
    }

    fn ids(s: &[&str]) -> BTreeSet<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn classify_examples() {
        let f = fan(&[("eta", 0, 1), ("p1", 1, 3)], &[("eta", "p1")]);
        assert_eq!(classify(&f, p(3)).unwrap().p_locus, ids(&["p1"]));

        let f = fan(&[("eta", 0, 1), ("p1", 1, 2), ("p2", 1, 1)], &[("eta", "p1"), ("eta", "p2")]);
        let part = classify(&f, p(2)).unwrap();
        assert_eq!(part.p_locus, ids(&["p1"]));
        assert_eq!(part.pprime_locus, ids(&["eta", "p2"]));

        for q in [2, 3, 5, 7] {
            let f = fan(&[("eta", 0, 1), ("E", 1, q)], &[("eta", "E")]);
            assert_eq!(classify(&f, p(q)).unwrap().p_locus, ids(&["E"]));
        }
    }

    #[test]
    fn classify_rejects_bad_poset() {
        let f = fan(&[("a", 0, 1), ("b", 0, 1)], &[]);
        assert!(matches!(classify(&f, p(2)), Err(Error::InvalidFan(_))));
        let f = fan(&[("eta", 0, 1), ("x", 1, 2)], &[]);
        assert!(classify(&f, p(2)).is_err());
        let f = fan(&[("eta", 0, 1), ("x", 2, 2), ("y", 1, 1)], &[("eta", "x"), ("x", "y")]);
        assert!(classify(&f, p(2)).is_err());
    }

    #[test]
    fn constructor_errors() {
        assert!(KatoFan::new(vec![FanPoint::new("a", 0, 0)], vec![]).is_err());
        assert!(KatoFan::new(vec![FanPoint::new("a", 0, 1), FanPoint::new("a", 1, 1)], vec![]).is_err());
        assert!(KatoFan::new(vec![FanPoint::new("a", 0, 1)], vec![specialization("a", "zz")]).is_err());
    }

    #[test]
    fn validate_multiple_fibre_is_clean() {
        let f = fan(&[("eta", 0, 1), ("E", 1, 5)], &[("eta", "E")]);
        assert!(validate_fan(&f, p(5)).is_empty());
    }

    #[test]
    fn validate_monotonicity() {
        // consistent: component of multiplicity p through a crossing with
        // gcd 1, which is in the p'-locus
        let ok = fan(
            &[("eta", 0, 1), ("A", 1, 3), ("B", 1, 1), ("x", 2, 1)],
            &[("eta", "A"), ("eta", "B"), ("A", "x"), ("B", "x")],
        );
        assert!(validate_fan(&ok, p(3)).is_empty());
        // a p-locus point in the closure of a p'-locus component
        let bad = fan(&[("eta", 0, 1), ("q", 1, 1), ("x", 2, 3)], &[("eta", "q"), ("q", "x")]);
        let v = validate_fan(&bad, p(3));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, Rule::LocusMonotonicity);
    }

    #[test]
    fn validate_chart_mismatch() {
        let chart = Chart::new(AffineMonoid::free(1), int_vec(&[4]), Face::trivial(), false).unwrap();
        let f = KatoFan::new(
            vec![FanPoint::new("eta", 0, 1), FanPoint::new("E", 1, 2).with_chart(chart)],
            vec![specialization("eta", "E")],
        )
        .unwrap();
        let v = validate_fan(&f, p(2));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, Rule::MsharpMismatch);
        assert!(v[0].detail.contains("chart gives 4"));
    }

    #[test]
    fn chart_smoothness_examples() {
        for q in [2, 3, 5] {
            let c = Chart::new(AffineMonoid::free(1), int_vec(&[1]), Face::trivial(), false).unwrap();
            assert_eq!(chart_log_smooth(&c, p(q)).unwrap().status, Smoothness::Smooth);

            let c = Chart::new(AffineMonoid::free(1), int_vec(&[q as i64]), Face::trivial(), true)
                .unwrap();
            assert_eq!(chart_log_smooth(&c, p(q)).unwrap().status, Smoothness::NotSmooth);

            let c = Chart::new(AffineMonoid::free(1), int_vec(&[q as i64]), Face::trivial(), false)
                .unwrap();
            assert_eq!(chart_log_smooth(&c, p(q)).unwrap().status, Smoothness::Unknown);

            // N^2 with v1 = (p, 1): m# = gcd(p, 1) = 1
            let c = Chart::new(AffineMonoid::free(2), int_vec(&[q as i64, 1]), Face::trivial(), true)
                .unwrap();
            assert_eq!(chart_log_smooth(&c, p(q)).unwrap().status, Smoothness::Smooth);
            assert!(!torsion_has_p(c.v1(), c.monoid().lattice(), p(q)).unwrap());
        }
    }

    #[test]
    fn chart_on_face_localizes() {
        // N^2, v1 = (1, p), at the generic point of the divisor x2 = 0:
        // face {e1}; image p, so p-locus.
        let c = Chart::new(AffineMonoid::free(2), int_vec(&[1, 3]), Face::new(vec![0]), true).unwrap();
        assert_eq!(c.msharp().unwrap(), BigInt::from(3));
        // v1 is primitive in Z^2, so smooth there
        assert_eq!(chart_log_smooth(&c, p(3)).unwrap().status, Smoothness::Smooth);
    }

    #[test]
    fn chart_errors() {
        let n1 = AffineMonoid::free(1);
        assert!(matches!(
            Chart::new(n1.clone(), int_vec(&[-1]), Face::trivial(), false),
            Err(Error::InvalidChart(_))
        ));
        assert!(Chart::new(n1.clone(), int_vec(&[1, 1]), Face::trivial(), false).is_err());
        // face = whole monoid: v1 maps to 0
        let c = Chart::new(n1, int_vec(&[2]), Face::new(vec![0]), false).unwrap();
        assert!(matches!(chart_log_smooth(&c, p(2)), Err(Error::InvalidChart(_))));
    }

    #[test]
    fn torsion_examples() {
        let z2 = Lattice::standard(2);
        assert!(!torsion_has_p(&int_vec(&[1, 0]), &z2, p(2)).unwrap());
        assert!(torsion_has_p(&int_vec(&[2, 2]), &z2, p(2)).unwrap());
        let z3 = Lattice::standard(3);
        for q in [2, 3, 5, 7] {
            assert!(!torsion_has_p(&int_vec(&[6, 10, 15]), &z3, p(q)).unwrap());
        }
        assert!(torsion_has_p(&int_vec(&[0, 0]), &z2, p(2)).is_err());
    }
}
