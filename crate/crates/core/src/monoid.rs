//! Finitely generated submonoids of `Z^d`.
//!
//! Membership is decided by exact bounded search. When the generators admit
//! a strictly positive integral grading `l` (always the case for a sharp
//! monoid) the search is finite: every coefficient is bounded by
//! `l(v) / l(g)`. Otherwise the search enumerates sums by total degree and
//! gives up with [`Error::BudgetExceeded`].

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{content, fmt_vec, is_zero_vec, IntVec, Lattice};
use crate::snf::smith_normal_form;

/// Default number of search nodes the membership oracle may visit.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

const PERCEPTRON_ROUNDS: usize = 10_000;

/// Facet normals are only enumerated when there are at most this many
/// candidate subsets of generators.
const FACET_SUBSET_LIMIT: u64 = 50_000;

#[derive(Debug, Clone)]
pub struct AffineMonoid {
    ambient_dim: usize,
    generators: Vec<IntVec>,
    lattice: Lattice,
    grading: Option<IntVec>,
    facets: Vec<IntVec>,
    budget: u64,
}

/// A face, given by the indices of the generators lying on it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Face {
    pub generator_indices: Vec<usize>,
}

impl Face {
    pub fn new(mut generator_indices: Vec<usize>) -> Self {
        generator_indices.sort_unstable();
        generator_indices.dedup();
        Face { generator_indices }
    }

    /// The trivial face `{0}` of a sharp monoid.
    pub fn trivial() -> Self {
        Face::default()
    }
}

impl PartialEq for AffineMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.generators == other.generators
    }
}

impl AffineMonoid {
    /// Monoid generated by `generators` in `Z^ambient_dim`. Zero generators
    /// are rejected; the trivial monoid has no generators.
    pub fn new(ambient_dim: usize, generators: Vec<IntVec>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != ambient_dim) {
            return Err(Error::InvalidInput(format!(
                "generator {} does not have ambient dimension {ambient_dim}",
                fmt_vec(g)
            )));
        }
        if generators.iter().any(|g| is_zero_vec(g)) {
            return Err(Error::InvalidInput("zero generator".into()));
        }
        let lattice = Lattice::span(ambient_dim, &generators)?;
        let coords: Vec<IntVec> = generators
            .iter()
            .map(|g| lattice.coordinates(g).expect("generator in its span"))
            .collect();
        let facets = facet_normals(&coords, lattice.rank());
        let grading = positive_grading(&coords).or_else(|| {
            // the facet normals of a pointed cone sum to an interior functional
            let first = facets.first()?;
            let sum = facets.iter().skip(1).fold(first.clone(), |acc, f| {
                acc.iter().zip(f).map(|(a, b)| a + b).collect()
            });
            coords.iter().all(|g| dot(&sum, g).is_positive()).then_some(sum)
        });
        let facets = if grading.is_some() { facets } else { Vec::new() };
        Ok(AffineMonoid {
            ambient_dim,
            generators,
            lattice,
            grading,
            facets,
            budget: DEFAULT_BUDGET,
        })
    }

    pub fn from_i64(ambient_dim: usize, generators: &[&[i64]]) -> Result<Self> {
        AffineMonoid::new(
            ambient_dim,
            generators
                .iter()
                .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// `N^d` with its standard generators.
    pub fn free(d: usize) -> Self {
        let gens = (0..d)
            .map(|i| {
                let mut e = vec![BigInt::zero(); d];
                e[i] = BigInt::one();
                e
            })
            .collect();
        AffineMonoid::new(d, gens).expect("standard basis is a valid generating set")
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[IntVec] {
        &self.generators
    }

    /// The group envelope `P^gp`.
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// A strictly positive grading on the generators, in lattice
    /// coordinates, if one was found. Its existence certifies sharpness.
    pub fn grading(&self) -> Option<&[BigInt]> {
        self.grading.as_deref()
    }

    pub fn member(&self, v: &[BigInt]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::InvalidInput(format!(
                "vector {} does not have ambient dimension {}",
                fmt_vec(v),
                self.ambient_dim
            )));
        }
        if is_zero_vec(v) {
            return Ok(true);
        }
        if !self.lattice.contains(v) {
            return Ok(false);
        }
        match &self.grading {
            Some(l) => self.member_graded(v, l),
            None => self.member_by_degree(v),
        }
    }

    /// Inward facet normals of the rational cone, in lattice coordinates.
    /// Empty when no grading exists or there are too many generators to
    /// enumerate them.
    pub fn facet_normals(&self) -> &[IntVec] {
        &self.facets
    }

    fn member_graded(&self, v: &[BigInt], l: &[BigInt]) -> Result<bool> {
        let coords = |w: &[BigInt]| self.lattice.coordinates(w).expect("in the lattice");
        let v = coords(v);
        let target = dot(l, &v);
        if !target.is_positive() {
            return Ok(false);
        }
        if self.facets.iter().any(|f| dot(f, &v).is_negative()) {
            return Ok(false);
        }
        // larger steps first keeps the successful branches shallow
        let mut gens: Vec<(BigInt, IntVec)> = self
            .generators
            .iter()
            .map(|g| coords(g))
            .map(|g| (dot(l, &g), g))
            .collect();
        gens.sort_by(|a, b| b.0.cmp(&a.0));
        let mut search = GradedSearch {
            gens: &gens,
            facets: &self.facets,
            failed: HashSet::new(),
            visited: 0,
            budget: self.budget,
        };
        search.run(0, v, target)
    }

    fn member_by_degree(&self, v: &[BigInt]) -> Result<bool> {
        let mut frontier: HashSet<IntVec> = HashSet::new();
        frontier.insert(vec![BigInt::zero(); self.ambient_dim]);
        let mut seen: HashSet<IntVec> = frontier.clone();
        let mut visited: u64 = 0;
        while !frontier.is_empty() {
            let mut next = HashSet::new();
            for x in &frontier {
                for g in &self.generators {
                    visited += 1;
                    if visited > self.budget {
                        return Err(Error::BudgetExceeded(self.budget));
                    }
                    let y: IntVec = x.iter().zip(g).map(|(a, b)| a + b).collect();
                    if y == v {
                        return Ok(true);
                    }
                    if seen.insert(y.clone()) {
                        next.insert(y);
                    }
                }
            }
            frontier = next;
        }
        // every reachable point has been seen: the monoid is finite, which
        // only happens for the trivial monoid
        Ok(false)
    }

    /// True iff the only unit is 0.
    pub fn is_sharp(&self) -> Result<bool> {
        if self.grading.is_some() || self.generators.is_empty() {
            return Ok(true);
        }
        // No grading found: look for a generator whose negative is a sum of
        // generators, by increasing total degree. Each level is shared
        // across all generators.
        let negatives: HashSet<IntVec> = self
            .generators
            .iter()
            .map(|g| g.iter().map(|x| -x).collect())
            .collect();
        let mut frontier: HashSet<IntVec> = HashSet::new();
        frontier.insert(vec![BigInt::zero(); self.ambient_dim]);
        let mut visited: u64 = 0;
        loop {
            let mut next = HashSet::new();
            for x in &frontier {
                for g in &self.generators {
                    visited += 1;
                    if visited > self.budget {
                        return Err(Error::BudgetExceeded(self.budget));
                    }
                    let y: IntVec = x.iter().zip(g).map(|(a, b)| a + b).collect();
                    if negatives.contains(&y) {
                        return Ok(false);
                    }
                    next.insert(y);
                }
            }
            frontier = next;
        }
    }

    /// Largest `m` with `v = m * a` for some `a` in the monoid.
    ///
    /// Only divisors of the lattice content can occur; they are tried from
    /// the largest down with the membership oracle. For a saturated monoid
    /// the first candidate already succeeds.
    pub fn max_divisibility(&self, v: &[BigInt]) -> Result<BigInt> {
        if is_zero_vec(v) {
            return Err(Error::InvalidInput(
                "maximal divisibility of 0 is undefined".into(),
            ));
        }
        if !self.member(v)? {
            return Err(Error::InvalidInput(format!(
                "{} is not in the monoid",
                fmt_vec(v)
            )));
        }
        let c = content(v, &self.lattice)?.expect("v is nonzero");
        let mut divisors = divisors(&c)?;
        divisors.sort_unstable_by(|a, b| b.cmp(a));
        for m in divisors {
            let a: IntVec = v.iter().map(|x| x / &m).collect();
            if self.member(&a)? {
                return Ok(m);
            }
        }
        unreachable!("m = 1 always divides a member")
    }

    /// Checks that `face` selects exactly the generators of a face of the
    /// rational cone. Returns the quotient map data on success.
    fn quotient_by_face(&self, face: &Face) -> Result<FaceQuotient> {
        if let Some(&i) = face
            .generator_indices
            .iter()
            .find(|&&i| i >= self.generators.len())
        {
            return Err(Error::InvalidFace(format!(
                "generator index {i} out of range (monoid has {} generators)",
                self.generators.len()
            )));
        }
        let r = self.lattice.rank();
        let face_rows: Vec<IntVec> = face
            .generator_indices
            .iter()
            .map(|&i| self.lattice.coordinates(&self.generators[i]).expect("generator in lattice"))
            .collect();
        let (right, s) = if face_rows.is_empty() {
            (crate::snf::Matrix::identity(r), 0)
        } else {
            let sf = smith_normal_form(&crate::snf::Matrix::from_rows(r, face_rows));
            let s = sf.rank();
            (sf.right, s)
        };
        Ok(FaceQuotient { right, skip: s })
    }

    /// Image of `self` in `P^gp / sat(F^gp)` together with the class of
    /// `marked`.
    ///
    /// The quotient lattice is identified with `Z^k`; in rank 1 the sign is
    /// chosen so that the image monoid lies in `N`.
    pub fn localize_sharpen(&self, face: &Face, marked: &[BigInt]) -> Result<(AffineMonoid, IntVec)> {
        let q = self.quotient_by_face(face)?;
        let project = |v: &[BigInt]| -> Result<IntVec> {
            let coords = self.lattice.coordinates(v).ok_or_else(|| {
                Error::InvalidInput(format!("{} is not in the group envelope", fmt_vec(v)))
            })?;
            Ok(q.project(&coords))
        };

        let selected: HashSet<usize> = face.generator_indices.iter().copied().collect();
        let mut images = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            let img = project(g)?;
            if selected.contains(&i) {
                continue;
            }
            if is_zero_vec(&img) {
                return Err(Error::InvalidFace(format!(
                    "generator {i} = {} lies in the span of the face but is not selected",
                    fmt_vec(g)
                )));
            }
            images.push(img);
        }
        let mut image = project(marked)?;
        let k = q.dim(self.lattice.rank());
        if k == 1 && images.iter().all(|g| !g[0].is_positive()) {
            for g in &mut images {
                g[0] = -&g[0];
            }
            image[0] = -&image[0];
        }
        images.sort();
        images.dedup();
        let quotient = AffineMonoid::new(k, images)?.with_budget(self.budget);
        if !quotient.is_sharp()? {
            return Err(Error::InvalidFace(
                "the selected generators do not span a face: the quotient is not sharp".into(),
            ));
        }
        Ok((quotient, image))
    }

    /// Validates a face without needing a marked element.
    pub fn check_face(&self, face: &Face) -> Result<()> {
        let zero = vec![BigInt::zero(); self.ambient_dim];
        self.localize_sharpen(face, &zero).map(|_| ())
    }

    /// Best-effort search for a witness that the monoid is not saturated:
    /// a lattice point `x` outside the monoid with `k x` a sum of
    /// generators, for `k <= max_denominator`. Candidates are the points
    /// `(sum c_i g_i) / k` with `0 <= c_i < k`.
    pub fn saturation_witness(&self, max_denominator: u32) -> Result<Option<IntVec>> {
        let n = self.generators.len();
        let mut visited: u64 = 0;
        for k in 2..=max_denominator.max(1) {
            let kb = BigInt::from(k);
            let mut coeffs = vec![0u32; n];
            loop {
                // next coefficient vector in [0, k)^n
                let mut i = 0;
                while i < n {
                    coeffs[i] += 1;
                    if coeffs[i] < k {
                        break;
                    }
                    coeffs[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                visited += 1;
                if visited > self.budget {
                    return Err(Error::BudgetExceeded(self.budget));
                }
                let mut sum = vec![BigInt::zero(); self.ambient_dim];
                for (c, g) in coeffs.iter().zip(&self.generators) {
                    if *c > 0 {
                        let c = BigInt::from(*c);
                        for (s, x) in sum.iter_mut().zip(g) {
                            *s += &c * x;
                        }
                    }
                }
                if sum.iter().any(|s| !s.is_multiple_of(&kb)) {
                    continue;
                }
                let x: IntVec = sum.iter().map(|s| s / &kb).collect();
                if self.lattice.contains(&x) && !self.member(&x)? {
                    return Ok(Some(x));
                }
            }
        }
        Ok(None)
    }
}

struct FaceQuotient {
    right: crate::snf::Matrix,
    skip: usize,
}

impl FaceQuotient {
    fn dim(&self, rank: usize) -> usize {
        rank - self.skip
    }

    fn project(&self, coords: &[BigInt]) -> IntVec {
        let w = self.right.left_apply(coords);
        w[self.skip..].to_vec()
    }
}

struct GradedSearch<'a> {
    gens: &'a [(BigInt, IntVec)],
    facets: &'a [IntVec],
    failed: HashSet<(usize, IntVec)>,
    visited: u64,
    budget: u64,
}

impl GradedSearch<'_> {
    /// Can `residual` (of degree `degree`) be written with generators
    /// `idx..`?
    fn run(&mut self, idx: usize, residual: IntVec, degree: BigInt) -> Result<bool> {
        if degree.is_zero() {
            return Ok(is_zero_vec(&residual));
        }
        if idx == self.gens.len() {
            return Ok(false);
        }
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let key = (idx, residual);
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let (idx, residual) = key;
        let gens = self.gens;
        let (gdeg, g) = &gens[idx];
        let max_c = &degree / gdeg;

        if idx + 1 == self.gens.len() {
            // last generator: residual must be an exact multiple
            let ok = degree.is_multiple_of(gdeg)
                && residual.iter().zip(g.iter()).all(|(r, x)| *r == &max_c * x);
            if !ok {
                self.failed.insert((idx, residual));
            }
            return Ok(ok);
        }

        let mut c = max_c.clone();
        loop {
            let next: IntVec = residual.iter().zip(g.iter()).map(|(r, x)| r - &c * x).collect();
            let next_deg = &degree - &c * gdeg;
            let in_cone = self.facets.iter().all(|f| !dot(f, &next).is_negative());
            if in_cone && self.run(idx + 1, next, next_deg)? {
                return Ok(true);
            }
            if c.is_zero() {
                break;
            }
            c -= 1;
        }
        self.failed.insert((idx, residual));
        Ok(false)
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Perceptron search for an integral `l` with `l . g > 0` for every
/// generator. Terminates quickly whenever such an `l` exists with a decent
/// margin; gives up after a fixed number of corrections otherwise.
fn positive_grading(gens: &[IntVec]) -> Option<IntVec> {
    let d = gens.first()?.len();
    let mut l = vec![BigInt::zero(); d];
    for g in gens {
        for (a, b) in l.iter_mut().zip(g) {
            *a += b;
        }
    }
    for _ in 0..PERCEPTRON_ROUNDS {
        match gens.iter().find(|g| !dot(&l, g).is_positive()) {
            None => return Some(l),
            Some(g) => {
                for (a, b) in l.iter_mut().zip(g) {
                    *a += b;
                }
            }
        }
    }
    None
}

/// Inward normals of the facets of `cone(gens)` in `Z^r`, for generators
/// spanning `Q^r` and admitting a positive grading. A hyperplane through
/// `r - 1` independent generators is a facet iff every generator lies on
/// one side of it.
fn facet_normals(gens: &[IntVec], r: usize) -> Vec<IntVec> {
    if r == 0 || binomial(gens.len() as u64, r as u64 - 1) > FACET_SUBSET_LIMIT {
        return Vec::new();
    }
    let mut out: Vec<IntVec> = Vec::new();
    let mut subset: Vec<usize> = (0..r - 1).collect();
    loop {
        let rows: Vec<&IntVec> = subset.iter().map(|&i| &gens[i]).collect();
        let mut normal: IntVec = (0..r)
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let d = determinant(minor);
                if j % 2 == 0 { d } else { -d }
            })
            .collect();
        if !is_zero_vec(&normal) {
            let g = crate::lattice::gcd_all(&normal);
            for x in normal.iter_mut() {
                *x = &*x / &g;
            }
            let signs: Vec<BigInt> = gens.iter().map(|v| dot(&normal, v)).collect();
            let one_side = if signs.iter().all(|s| !s.is_negative()) {
                true
            } else if signs.iter().all(|s| !s.is_positive()) {
                normal.iter_mut().for_each(|x| *x = -&*x);
                true
            } else {
                false
            };
            if one_side && !out.contains(&normal) {
                out.push(normal);
            }
        }
        // next (r-1)-subset in lexicographic order
        let k = r - 1;
        let Some(i) = (0..k).rev().find(|&i| subset[i] < gens.len() - k + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Determinant by fraction-free (Bareiss) elimination.
fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n
        .abs()
        .to_u64()
        .ok_or(Error::Overflow("divisor enumeration"))?;
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(BigInt::from(i));
            if i * i != n {
                out.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int_vec;

    fn even_sum() -> AffineMonoid {
        AffineMonoid::from_i64(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap()
    }

    #[test]
    fn membership_examples() {
        let n2 = AffineMonoid::free(2);
        assert!(n2.member(&int_vec(&[1, 1])).unwrap());
        let p = even_sum();
        assert!(!p.member(&int_vec(&[1, 0])).unwrap());
        assert!(p.member(&int_vec(&[2, 2])).unwrap());
        assert!(!p.member(&int_vec(&[-2, 2])).unwrap());
    }

    #[test]
    fn membership_non_saturated() {
        // <2, 3> in Z misses 1 only
        let p = AffineMonoid::from_i64(1, &[&[2], &[3]]).unwrap();
        let got: Vec<bool> = (0..8).map(|n| p.member(&int_vec(&[n])).unwrap()).collect();
        assert_eq!(got, vec![true, false, true, true, true, true, true, true]);
    }

    #[test]
    fn sharpness_examples() {
        assert!(AffineMonoid::free(2).is_sharp().unwrap());
        let line = AffineMonoid::from_i64(2, &[&[1, 0], &[-1, 0]]).unwrap();
        assert!(!line.is_sharp().unwrap());
        assert!(even_sum().is_sharp().unwrap());
        let half_plane = AffineMonoid::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert!(!half_plane.is_sharp().unwrap());
    }

    #[test]
    fn non_sharp_membership_finds_units() {
        let line = AffineMonoid::from_i64(2, &[&[1, 0], &[-1, 0]]).unwrap();
        assert!(line.member(&int_vec(&[-3, 0])).unwrap());
        assert!(!line.member(&int_vec(&[0, 1])).unwrap());
    }

    #[test]
    fn non_sharp_membership_can_exhaust_budget() {
        // (0,1) is in the lattice but not in the monoid; without a grading
        // the degree search never terminates on its own.
        let p = AffineMonoid::from_i64(2, &[&[1, 0], &[-1, 0], &[1, 2], &[0, 2], &[1, 1]])
            .unwrap()
            .with_budget(5_000);
        assert!(p.grading().is_none());
        assert!(p.member(&int_vec(&[0, -1])).is_err());
    }

    #[test]
    fn facets_of_a_simplicial_cone() {
        let p = AffineMonoid::from_i64(2, &[&[1, 0], &[1, 1], &[1, 2]]).unwrap();
        let mut f = p.facet_normals().to_vec();
        f.sort();
        assert_eq!(f, vec![int_vec(&[0, 1]), int_vec(&[2, -1])]);
        assert!(determinant(vec![int_vec(&[2, 4, 4]), int_vec(&[-6, 6, 12]), int_vec(&[10, -4, -16])]) == BigInt::from(-144));
    }

    #[test]
    fn thin_free_monoid_is_graded_and_fast() {
        let basis = [&[4, 5, 2, -4][..], &[2, 4, -2, -6], &[-4, -6, 1, 4], &[4, -4, -4, 6]];
        let p = AffineMonoid::from_i64(4, &basis).unwrap().with_budget(10_000);
        assert!(p.grading().is_some());
        // 5 * (2, 3, 2, 4) in generator coordinates
        let v = int_vec(&[110, -30, -80, 30]);
        assert_eq!(p.max_divisibility(&v).unwrap(), BigInt::from(5));
        assert!(!p.member(&int_vec(&[-4, -5, -2, 4])).unwrap());
    }

    #[test]
    fn max_divisibility_examples() {
        let n1 = AffineMonoid::free(1);
        assert_eq!(n1.max_divisibility(&int_vec(&[7])).unwrap(), BigInt::from(7));
        let n2 = AffineMonoid::free(2);
        assert_eq!(n2.max_divisibility(&int_vec(&[4, 6])).unwrap(), BigInt::from(2));
        assert_eq!(even_sum().max_divisibility(&int_vec(&[2, 2])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn max_divisibility_non_saturated() {
        // <2,3>: 6 = 3*2 = 2*3, and 1 is not a member, so 6 is not 6*1
        let p = AffineMonoid::from_i64(1, &[&[2], &[3]]).unwrap();
        assert_eq!(p.max_divisibility(&int_vec(&[6])).unwrap(), BigInt::from(3));
    }

    #[test]
    fn max_divisibility_errors() {
        let p = even_sum();
        assert!(p.max_divisibility(&int_vec(&[0, 0])).is_err());
        assert!(p.max_divisibility(&int_vec(&[1, 0])).is_err());
    }

    #[test]
    fn localize_examples() {
        let n2 = AffineMonoid::free(2);
        let (q, img) = n2.localize_sharpen(&Face::new(vec![0]), &int_vec(&[3, 5])).unwrap();
        assert_eq!(q.ambient_dim(), 1);
        assert_eq!(q.generators(), &[int_vec(&[1])]);
        assert_eq!(img, int_vec(&[5]));

        let (q, img) = n2.localize_sharpen(&Face::trivial(), &int_vec(&[3, 5])).unwrap();
        assert_eq!(q.lattice(), n2.lattice());
        assert_eq!(q.max_divisibility(&img).unwrap(), BigInt::from(1));

        let (q, img) = even_sum()
            .localize_sharpen(&Face::new(vec![0]), &int_vec(&[2, 2]))
            .unwrap();
        assert_eq!(q.ambient_dim(), 1);
        assert_eq!(img, int_vec(&[2]));
        assert_eq!(q.max_divisibility(&img).unwrap(), BigInt::from(2));
        assert!(q.is_sharp().unwrap());
    }

    #[test]
    fn invalid_faces() {
        let p = even_sum();
        // (1,1) is interior: {(1,1)} is not a face
        assert!(matches!(
            p.localize_sharpen(&Face::new(vec![1]), &int_vec(&[2, 2])),
            Err(Error::InvalidFace(_))
        ));
        // out of range
        assert!(matches!(p.check_face(&Face::new(vec![7])), Err(Error::InvalidFace(_))));
        // a line segment face must contain every generator on its ray
        let q = AffineMonoid::from_i64(2, &[&[1, 0], &[2, 0], &[0, 1]]).unwrap();
        assert!(q.check_face(&Face::new(vec![0])).is_err());
        assert!(q.check_face(&Face::new(vec![0, 1])).is_ok());
        // the whole monoid is a face
        assert!(p.check_face(&Face::new(vec![0, 1, 2])).is_ok());
    }

    #[test]
    fn saturation_witness_examples() {
        let p = AffineMonoid::from_i64(1, &[&[2], &[3]]).unwrap();
        assert_eq!(p.saturation_witness(3).unwrap(), Some(int_vec(&[1])));
        assert_eq!(even_sum().saturation_witness(4).unwrap(), None);
        // (0,1) is missing but 2*(0,1) = (0,2) is a generator
        let q = AffineMonoid::from_i64(2, &[&[2, 0], &[0, 2], &[1, 1], &[1, 0]]).unwrap();
        assert_eq!(q.saturation_witness(2).unwrap(), Some(int_vec(&[0, 1])));
        let r = AffineMonoid::from_i64(2, &[&[1, 0], &[1, 2], &[1, 1], &[0, 3]]).unwrap();
        assert!(r.saturation_witness(4).unwrap().is_some());
    }
}
