//! Weighted dual graphs of sncd special fibres of curve models.
//!
//! A vertex is a component with its multiplicity, genus and
//! self-intersection; an edge is a crossing point. Loops (a component
//! crossing itself) are only accepted when the graph is built with
//! `allow_loops`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::{Chart, FanPoint, KatoFan};
use crate::lattice::int_vec;
use crate::model::{LogModel, StratumData};
use crate::monoid::{AffineMonoid, Face};
use crate::prime::Prime;
use crate::report::{Rule, Violation};

/// Id of the generic point in [`strata_model`].
pub const GENERIC_ID: &str = "η";

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Vertex {
    pub id: String,
    pub mult: u64,
    pub genus: u32,
    pub self_int: i64,
}

impl Vertex {
    pub fn new(id: impl Into<String>, mult: u64, genus: u32, self_int: i64) -> Self {
        Vertex {
            id: id.into(),
            mult,
            genus,
            self_int,
        }
    }
}

/// Equality is up to vertex order and edge order.
#[derive(Debug, Clone)]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(String, String)>,
    allow_loops: bool,
    strict_fibre: bool,
}

fn edge_key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

impl DualGraph {
    pub fn new(
        vertices: Vec<Vertex>,
        edges: Vec<(String, String)>,
        allow_loops: bool,
        strict_fibre: bool,
    ) -> Result<Self> {
        let g = DualGraph {
            vertices,
            edges: edges.iter().map(|(a, b)| edge_key(a, b)).collect(),
            allow_loops,
            strict_fibre,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut ids = BTreeSet::new();
        for v in &self.vertices {
            if !ids.insert(v.id.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate vertex id `{}`", v.id)));
            }
            if v.mult == 0 {
                return Err(Error::InvalidGraph(format!(
                    "vertex `{}`: multiplicity must be >= 1",
                    v.id
                )));
            }
        }
        for (a, b) in &self.edges {
            for end in [a, b] {
                if !ids.contains(end.as_str()) {
                    return Err(Error::InvalidGraph(format!("edge to unknown vertex `{end}`")));
                }
            }
            if a == b && !self.allow_loops {
                return Err(Error::InvalidGraph(format!(
                    "loop at `{a}` but loops are not allowed for this graph"
                )));
            }
        }
        if !self.is_connected() {
            return Err(Error::InvalidGraph("graph is not connected".into()));
        }
        if self.strict_fibre {
            if let Some(v) = self.fibre_violations().first() {
                return Err(Error::InvalidGraph(format!("{}: {}", v.subject, v.detail)));
            }
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        let mut adj: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for (a, b) in &self.edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let start = self.vertices[0].id.as_str();
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in adj.get(v).map(Vec::as_slice).unwrap_or_default() {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(String, String)] {
        &self.edges
    }

    pub fn allow_loops(&self) -> bool {
        self.allow_loops
    }

    pub fn strict_fibre(&self) -> bool {
        self.strict_fibre
    }

    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    fn vertex_mut(&mut self, id: &str) -> &mut Vertex {
        self.vertices.iter_mut().find(|v| v.id == id).expect("known vertex")
    }

    /// Number of edge endpoints at `id`, loops counted twice.
    pub fn degree(&self, id: &str) -> usize {
        self.edges
            .iter()
            .map(|(a, b)| usize::from(a == id) + usize::from(b == id))
            .sum()
    }

    /// Neighbors of `id` with repetition, one entry per non-loop edge.
    pub fn neighbors(&self, id: &str) -> Vec<&str> {
        self.edges
            .iter()
            .filter_map(|(a, b)| match (a == id, b == id) {
                (true, false) => Some(b.as_str()),
                (false, true) => Some(a.as_str()),
                _ => None,
            })
            .collect()
    }

    pub fn has_loop(&self, id: &str) -> bool {
        self.edges.iter().any(|(a, b)| a == id && b == id)
    }

    /// Vertices whose intersection with the whole fibre is nonzero.
    pub fn fibre_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for v in &self.vertices {
            let mut total = i128::from(v.mult) * i128::from(v.self_int);
            for w in self.neighbors(&v.id) {
                total += i128::from(self.vertex(w).expect("validated").mult);
            }
            if total != 0 {
                out.push(Violation::new(
                    Rule::FibreConsistency,
                    v.id.clone(),
                    format!("intersection with the fibre is {total}, expected 0"),
                ));
            }
        }
        out
    }

    pub fn mult_gcd(&self) -> u64 {
        self.vertices.iter().fold(0, |g, v| g.gcd(&v.mult))
    }

    fn canonical(&self) -> (Vec<Vertex>, Vec<(String, String)>) {
        let mut vs = self.vertices.clone();
        vs.sort();
        let mut es = self.edges.clone();
        es.sort();
        (vs, es)
    }

    /// Graphviz text; vertex labels are `mult:genus:self`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph fibre {\n");
        for v in &self.vertices {
            let _ = writeln!(
                out,
                "  \"{}\" [label=\"{}:{}:{}\"];",
                v.id, v.mult, v.genus, v.self_int
            );
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
        }
        out.push_str("}\n");
        out
    }

    fn fresh_id(&self, stem: &str) -> String {
        (1..)
            .map(|k| format!("{stem}{k}"))
            .find(|id| self.vertex(id).is_none())
            .expect("unbounded search")
    }

    /// Blows up a smooth point of component `id`; returns the new graph and
    /// the id of the exceptional curve.
    pub fn blow_up_point(&self, id: &str) -> Result<(DualGraph, String)> {
        let mult = self
            .vertex(id)
            .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex `{id}`")))?
            .mult;
        let mut g = self.clone();
        let e = g.fresh_id("X");
        g.vertex_mut(id).self_int -= 1;
        g.vertices.push(Vertex::new(e.clone(), mult, 0, -1));
        g.edges.push(edge_key(id, &e));
        Ok((g, e))
    }

    /// Blows up the crossing given by one copy of the edge `a`–`b`.
    pub fn blow_up_crossing(&self, a: &str, b: &str) -> Result<(DualGraph, String)> {
        let key = edge_key(a, b);
        let pos = self
            .edges
            .iter()
            .position(|e| *e == key)
            .ok_or_else(|| Error::InvalidGraph(format!("no edge {a}–{b}")))?;
        let (ma, mb) = (self.vertex(a).unwrap().mult, self.vertex(b).unwrap().mult);
        let mult = ma
            .checked_add(mb)
            .ok_or(Error::Overflow("exceptional multiplicity"))?;
        let mut g = self.clone();
        let e = g.fresh_id("X");
        g.edges.remove(pos);
        if a == b {
            g.vertex_mut(a).self_int -= 4;
        } else {
            g.vertex_mut(a).self_int -= 1;
            g.vertex_mut(b).self_int -= 1;
        }
        g.vertices.push(Vertex::new(e.clone(), mult, 0, -1));
        g.edges.push(edge_key(a, &e));
        g.edges.push(edge_key(b, &e));
        Ok((g, e))
    }
}

impl PartialEq for DualGraph {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for DualGraph {}

fn edge_point_id(a: &str, b: &str, i: usize) -> String {
    format!("{a}~{b}#{i}")
}

/// The stratification of an sncd fibre as a log model: a codimension-1
/// point per component and a codimension-2 point per crossing.
///
/// The model is marked log smooth exactly when [`saito_check`] passes.
pub fn strata_model(g: &DualGraph, p: Prime) -> Result<LogModel> {
    let mut points = Vec::new();
    let mut specs = Vec::new();
    let mut strata = Vec::new();
    let mut generic_chi: i128 = 0;
    for v in &g.vertices {
        let chi = 2 - 2 * i64::from(v.genus) - g.degree(&v.id) as i64;
        generic_chi += i128::from(v.mult) * i128::from(chi);
        let chart = Chart::new(
            AffineMonoid::free(1),
            int_vec(&[to_i64(v.mult)?]),
            Face::trivial(),
            false,
        )?;
        points.push(FanPoint::new(v.id.clone(), 1, v.mult).with_chart(chart));
        specs.push((GENERIC_ID.to_string(), v.id.clone()));
        strata.push(StratumData {
            point_id: v.id.clone(),
            chi_open: chi,
            dim_closed: 1,
            genus: Some(v.genus),
        });
    }
    let mut seen: BTreeMap<(String, String), usize> = BTreeMap::new();
    for (a, b) in &g.edges {
        let i = seen.entry((a.clone(), b.clone())).or_insert(0);
        *i += 1;
        let id = edge_point_id(a, b, *i);
        let (ma, mb) = (g.vertex(a).unwrap().mult, g.vertex(b).unwrap().mult);
        let chart = Chart::new(
            AffineMonoid::free(2),
            int_vec(&[to_i64(ma)?, to_i64(mb)?]),
            Face::trivial(),
            false,
        )?;
        points.push(FanPoint::new(id.clone(), 2, ma.gcd(&mb)).with_chart(chart));
        specs.push((a.clone(), id.clone()));
        if a != b {
            specs.push((b.clone(), id.clone()));
        }
        strata.push(StratumData {
            point_id: id,
            chi_open: 1,
            dim_closed: 0,
            genus: None,
        });
    }
    points.insert(0, FanPoint::new(GENERIC_ID, 0, 1));
    strata.insert(
        0,
        StratumData {
            point_id: GENERIC_ID.to_string(),
            chi_open: i64::try_from(generic_chi).map_err(|_| Error::Overflow("generic Euler"))?,
            dim_closed: 2,
            genus: None,
        },
    );
    let fan = KatoFan::new(points, specs).map_err(|e| Error::InvalidGraph(e.to_string()))?;
    let smooth = saito_check(g, p).map(|v| v.pass).unwrap_or(false);
    LogModel::new(fan, strata, p, smooth).map_err(|e| Error::InvalidGraph(e.to_string()))
}

fn to_i64(m: u64) -> Result<i64> {
    i64::try_from(m).map_err(|_| Error::Overflow("multiplicity"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaitoFailure {
    pub vertex: String,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaitoVerdict {
    pub pass: bool,
    pub failures: Vec<SaitoFailure>,
}

/// Saito's log smoothness criterion for sncd curve fibres: every component
/// of multiplicity divisible by `p` is rational and meets exactly two
/// components, both of multiplicity prime to `p`.
pub fn saito_check(g: &DualGraph, p: Prime) -> Result<SaitoVerdict> {
    let mut failures = Vec::new();
    for v in &g.vertices {
        if !p.divides(v.mult) {
            continue;
        }
        if g.has_loop(&v.id) {
            return Err(Error::InvalidGraph(format!(
                "component `{}` has multiplicity divisible by {p} and crosses itself",
                v.id
            )));
        }
        let mut reasons = Vec::new();
        if v.genus != 0 {
            reasons.push(format!("genus {} is not 0", v.genus));
        }
        let degree = g.degree(&v.id);
        if degree != 2 {
            reasons.push(format!("meets {degree} components, expected 2"));
        }
        for w in g.neighbors(&v.id) {
            let m = g.vertex(w).unwrap().mult;
            if p.divides(m) {
                reasons.push(format!("neighbor `{w}` has multiplicity {m} divisible by {p}"));
            }
        }
        if !reasons.is_empty() {
            failures.push(SaitoFailure {
                vertex: v.id.clone(),
                reasons,
            });
        }
    }
    Ok(SaitoVerdict {
        pass: failures.is_empty(),
        failures,
    })
}

/// Multiplies every multiplicity by `m`.
pub fn scale(g: &DualGraph, m: u64) -> Result<DualGraph> {
    if m == 0 {
        return Err(Error::InvalidInput("scale factor must be >= 1".into()));
    }
    let mut out = g.clone();
    for v in &mut out.vertices {
        v.mult = v
            .mult
            .checked_mul(m)
            .ok_or(Error::Overflow("scaled multiplicity"))?;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: DualGraph,
    pub smoothness_preserved: bool,
}

/// Contracts the (−1)-curve `id`, which must be rational, loop-free and
/// meet at most two other components.
pub fn contract(g: &DualGraph, id: &str, p: Prime) -> Result<Contraction> {
    let refuse = |why: &str| Error::NotContractible(id.to_string(), why.to_string());
    let v = g.vertex(id).ok_or_else(|| refuse("no such vertex"))?;
    if v.genus != 0 {
        return Err(refuse("genus is not 0"));
    }
    if v.self_int != -1 {
        return Err(refuse("self-intersection is not -1"));
    }
    if g.has_loop(id) {
        return Err(refuse("component crosses itself"));
    }
    let nbrs = g.neighbors(id);
    let mut out = g.clone();
    out.vertices.retain(|w| w.id != id);
    out.edges.retain(|(a, b)| a != id && b != id);
    let preserved = match nbrs.as_slice() {
        [] => return Err(refuse("isolated component; the fibre would be empty")),
        [a] => {
            out.vertex_mut(a).self_int += 1;
            let ma = g.vertex(a).unwrap().mult;
            !p.divides(v.mult) && !p.divides(ma)
        }
        [a, b] if a == b => return Err(refuse("meets the same component twice")),
        [a, b] => {
            out.vertex_mut(a).self_int += 1;
            out.vertex_mut(b).self_int += 1;
            out.edges.push(edge_key(a, b));
            true
        }
        _ => return Err(refuse("meets three or more components")),
    };
    Ok(Contraction {
        graph: out,
        smoothness_preserved: preserved,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractAll {
    pub graph: DualGraph,
    /// Contracted vertex ids in order.
    pub contracted: Vec<String>,
    pub smoothness_preserved: bool,
}

/// Contracts contractible (−1)-curves until none remain, always taking the
/// smallest eligible id.
pub fn contract_all(g: &DualGraph, p: Prime) -> ContractAll {
    let mut graph = g.clone();
    let mut contracted = Vec::new();
    let mut preserved = true;
    loop {
        let mut ids: Vec<&str> = graph.vertices.iter().map(|v| v.id.as_str()).collect();
        ids.sort_unstable();
        let Some((id, c)) = ids
            .into_iter()
            .find_map(|id| contract(&graph, id, p).ok().map(|c| (id.to_string(), c)))
        else {
            break;
        };
        preserved &= c.smoothness_preserved;
        contracted.push(id);
        graph = c.graph;
    }
    ContractAll {
        graph,
        contracted,
        smoothness_preserved: preserved,
    }
}

/// Kodaira fibre types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KodairaType {
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
}

impl KodairaType {
    /// Parses a symbol with an optional separate `n`, e.g. `("I*", Some(2))`
    /// or `("I2*", None)`.
    pub fn parse(sym: &str, n: Option<u32>) -> Result<Self> {
        let bad = || Error::UnsupportedType(format!("unknown Kodaira symbol `{sym}`"));
        let s = sym.trim();
        let fixed = match s {
            "II" => Some(KodairaType::II),
            "III" => Some(KodairaType::III),
            "IV" => Some(KodairaType::IV),
            "II*" => Some(KodairaType::IIStar),
            "III*" => Some(KodairaType::IIIStar),
            "IV*" => Some(KodairaType::IVStar),
            _ => None,
        };
        if let Some(t) = fixed {
            return match n {
                None => Ok(t),
                Some(_) => Err(Error::UnsupportedType(format!("type {s} takes no n"))),
            };
        }
        let rest = s.strip_prefix('I').ok_or_else(bad)?;
        let (digits, star) = match rest.strip_suffix('*') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        let n = match (digits, n) {
            ("" | "n", Some(n)) => n,
            ("" | "n", None) => {
                return Err(Error::UnsupportedType(format!("type {s} needs n")));
            }
            (d, given) => {
                let parsed: u32 = d.parse().map_err(|_| bad())?;
                if given.is_some_and(|g| g != parsed) {
                    return Err(Error::UnsupportedType(format!(
                        "type {s} conflicts with n = {}",
                        given.unwrap()
                    )));
                }
                parsed
            }
        };
        Ok(if star {
            KodairaType::IStar(n)
        } else {
            KodairaType::I(n)
        })
    }

    /// Euler number of the fibre, counting the blow-ups needed to make the
    /// reduced fibre a normal crossings divisor for I1, II, III and IV.
    pub fn sncd_euler_number(self) -> u64 {
        match self {
            KodairaType::I(0) => 0,
            KodairaType::I(1) => 2,
            KodairaType::I(n) => u64::from(n),
            KodairaType::IStar(n) => u64::from(n) + 6,
            KodairaType::II | KodairaType::III | KodairaType::IV => 5,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }
}

impl FromStr for KodairaType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KodairaType::parse(s, None)
    }
}

impl std::fmt::Display for KodairaType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::II => f.write_str("II"),
            KodairaType::III => f.write_str("III"),
            KodairaType::IV => f.write_str("IV"),
            KodairaType::IIStar => f.write_str("II*"),
            KodairaType::IIIStar => f.write_str("III*"),
            KodairaType::IVStar => f.write_str("IV*"),
        }
    }
}

struct Builder {
    vertices: Vec<Vertex>,
    edges: Vec<(String, String)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn v(&mut self, id: impl Into<String>, mult: u64, self_int: i64) -> &mut Self {
        self.vertices.push(Vertex::new(id, mult, 0, self_int));
        self
    }

    fn e(&mut self, a: impl AsRef<str>, b: impl AsRef<str>) -> &mut Self {
        self.edges.push(edge_key(a.as_ref(), b.as_ref()));
        self
    }

    /// A path of `-2` curves with the given ids and multiplicities.
    fn chain(&mut self, nodes: &[(&str, u64)]) -> &mut Self {
        for (id, m) in nodes {
            self.v(*id, *m, -2);
        }
        for w in nodes.windows(2) {
            self.e(w[0].0, w[1].0);
        }
        self
    }

    fn build(&mut self) -> DualGraph {
        DualGraph::new(
            std::mem::take(&mut self.vertices),
            std::mem::take(&mut self.edges),
            false,
            true,
        )
        .expect("catalog graphs are valid fibres")
    }
}

/// The minimal sncd fibre of the given Kodaira type.
pub fn kodaira(t: KodairaType) -> Result<DualGraph> {
    let mut b = Builder::new();
    let g = match t {
        KodairaType::I(0) => {
            b.vertices.push(Vertex::new("E", 1, 1, 0));
            b.build()
        }
        // nodal curve, node blown up
        KodairaType::I(1) => b.v("C", 1, -4).v("E", 2, -1).e("C", "E").e("C", "E").build(),
        KodairaType::I(n) => {
            let ids: Vec<String> = (0..n).map(|i| format!("C{i}")).collect();
            for id in &ids {
                b.v(id.clone(), 1, -2);
            }
            for i in 0..ids.len() {
                b.e(&ids[i], &ids[(i + 1) % ids.len()]);
            }
            b.build()
        }
        KodairaType::IStar(n) => {
            let ids: Vec<String> = (0..=n).map(|i| format!("D{i}")).collect();
            let chain: Vec<(&str, u64)> = ids.iter().map(|s| (s.as_str(), 2)).collect();
            b.chain(&chain);
            let last = ids.last().unwrap().clone();
            b.v("T1", 1, -2).v("T2", 1, -2).v("T3", 1, -2).v("T4", 1, -2);
            b.e("T1", "D0").e("T2", "D0").e("T3", &last).e("T4", &last);
            b.build()
        }
        // cusp resolved: three blow-ups
        KodairaType::II => b
            .v("C", 1, -6)
            .v("E1", 2, -3)
            .v("E2", 3, -2)
            .v("E3", 6, -1)
            .e("C", "E3")
            .e("E1", "E3")
            .e("E2", "E3")
            .build(),
        // tangency resolved: two blow-ups
        KodairaType::III => b
            .v("C1", 1, -4)
            .v("C2", 1, -4)
            .v("E1", 2, -2)
            .v("E2", 4, -1)
            .e("C1", "E2")
            .e("C2", "E2")
            .e("E1", "E2")
            .build(),
        // triple point blown up
        KodairaType::IV => b
            .v("C1", 1, -3)
            .v("C2", 1, -3)
            .v("C3", 1, -3)
            .v("E", 3, -1)
            .e("C1", "E")
            .e("C2", "E")
            .e("C3", "E")
            .build(),
        KodairaType::IVStar => b
            .chain(&[("A1", 1), ("A2", 2), ("Z", 3), ("B2", 2), ("B1", 1)])
            .chain(&[("C2", 2), ("C1", 1)])
            .e("Z", "C2")
            .build(),
        KodairaType::IIIStar => b
            .chain(&[
                ("A1", 1),
                ("A2", 2),
                ("A3", 3),
                ("Z", 4),
                ("B3", 3),
                ("B2", 2),
                ("B1", 1),
            ])
            .v("C", 2, -2)
            .e("Z", "C")
            .build(),
        KodairaType::IIStar => b
            .chain(&[
                ("A1", 1),
                ("A2", 2),
                ("A3", 3),
                ("A4", 4),
                ("A5", 5),
                ("Z", 6),
                ("B4", 4),
                ("B2", 2),
            ])
            .v("C", 3, -2)
            .e("Z", "C")
            .build(),
    };
    Ok(g)
}

/// The minimal regular I1 fibre: one nodal rational curve, its node
/// recorded as a loop. Not sncd; [`kodaira`] returns its resolution.
pub fn nodal_i1() -> DualGraph {
    DualGraph::new(
        vec![Vertex::new("C", 1, 0, 0)],
        vec![("C".into(), "C".into())],
        true,
        true,
    )
    .expect("valid fibre")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{tame_euler, tame_zeta};

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn graph(vs: &[(&str, u64, u32, i64)], es: &[(&str, &str)], strict: bool) -> DualGraph {
        DualGraph::new(
            vs.iter().map(|v| Vertex::new(v.0, v.1, v.2, v.3)).collect(),
            es.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            false,
            strict,
        )
        .unwrap()
    }

    fn euler_sum(g: &DualGraph) -> i64 {
        let m = strata_model(g, p(5)).unwrap();
        m.strata()
            .filter(|s| s.point_id != GENERIC_ID)
            .map(|s| s.chi_open)
            .sum()
    }

    #[test]
    fn strata_of_i2() {
        let g = kodaira(KodairaType::I(2)).unwrap();
        let m = strata_model(&g, p(5)).unwrap();
        assert_eq!(m.stratum("C0").chi_open, 0);
        assert_eq!(m.stratum("C1").chi_open, 0);
        assert_eq!(m.stratum("C0~C1#1").chi_open, 1);
        assert_eq!(m.stratum("C0~C1#2").chi_open, 1);
        assert_eq!(euler_sum(&g), 2);
    }

    #[test]
    fn strata_of_smooth_elliptic() {
        let g = kodaira(KodairaType::I(0)).unwrap();
        let m = strata_model(&g, p(2)).unwrap();
        assert_eq!(m.stratum("E").chi_open, 0);
        assert!(m.log_smooth_claimed());
    }

    #[test]
    fn strata_of_i0_star() {
        let g = kodaira(KodairaType::IStar(0)).unwrap();
        let m = strata_model(&g, p(5)).unwrap();
        assert_eq!(m.stratum("D0").chi_open, -2);
        for t in ["T1", "T2", "T3", "T4"] {
            assert_eq!(m.stratum(t).chi_open, 1);
        }
        assert_eq!(euler_sum(&g), 6);
        assert_eq!(m.stratum(GENERIC_ID).chi_open, 0);
    }

    #[test]
    fn catalog_shapes() {
        let g = kodaira(KodairaType::I(2)).unwrap();
        assert_eq!((g.vertices().len(), g.edges().len()), (2, 2));
        let mut mults: Vec<u64> = kodaira(KodairaType::IStar(0))
            .unwrap()
            .vertices()
            .iter()
            .map(|v| v.mult)
            .collect();
        mults.sort_unstable();
        assert_eq!(mults, vec![1, 1, 1, 1, 2]);
        let mut mults: Vec<u64> = kodaira(KodairaType::IVStar)
            .unwrap()
            .vertices()
            .iter()
            .map(|v| v.mult)
            .collect();
        mults.sort_unstable();
        assert_eq!(mults, vec![1, 1, 1, 2, 2, 2, 3]);
    }

    #[test]
    fn resolved_types_are_minimal_sncd() {
        for t in [KodairaType::I(1), KodairaType::II, KodairaType::III, KodairaType::IV] {
            let g = kodaira(t).unwrap();
            assert!(g.fibre_violations().is_empty(), "{t}");
            assert_eq!(euler_sum(&g), t.sncd_euler_number() as i64, "{t}");
            let done = contract_all(&g, p(5));
            assert!(done.contracted.is_empty(), "{t} has a contractible curve");
        }
    }

    #[test]
    fn nodal_i1_euler_and_resolution() {
        let g = nodal_i1();
        assert_eq!(euler_sum(&g), 1);
        let m = strata_model(&g, p(2)).unwrap();
        assert_eq!(m.stratum("C").chi_open, 0);
        let (b, e) = g.blow_up_crossing("C", "C").unwrap();
        assert!(b.fibre_violations().is_empty());
        let resolved = kodaira(KodairaType::I(1)).unwrap();
        assert_eq!(b.vertex(&e).unwrap().mult, 2);
        assert_eq!(b.vertex("C").unwrap().self_int, -4);
        assert_eq!(b.edges().len(), resolved.edges().len());
    }

    #[test]
    fn saito_examples() {
        let i2 = kodaira(KodairaType::I(2)).unwrap();
        assert!(saito_check(&i2, p(2)).unwrap().pass);
        let i0s = kodaira(KodairaType::IStar(0)).unwrap();
        let v = saito_check(&i0s, p(2)).unwrap();
        assert!(!v.pass);
        assert_eq!(v.failures.len(), 1);
        assert_eq!(v.failures[0].vertex, "D0");
        for q in [2, 3, 5] {
            let chain = graph(&[("A", 1, 0, -(q as i64)), ("B", q, 0, -1), ("C", 1, 0, -(q as i64))], &[("A", "B"), ("B", "C")], false);
            assert!(saito_check(&chain, p(q)).unwrap().pass);
        }
    }

    #[test]
    fn saito_rejects_loop_on_wild_component() {
        let g = DualGraph::new(
            vec![Vertex::new("C", 2, 0, 0)],
            vec![("C".into(), "C".into())],
            true,
            false,
        )
        .unwrap();
        assert!(matches!(saito_check(&g, p(2)), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn loops_need_flag() {
        let err = DualGraph::new(
            vec![Vertex::new("C", 1, 0, 0)],
            vec![("C".into(), "C".into())],
            false,
            false,
        );
        assert!(matches!(err, Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn scale_examples() {
        let i2 = kodaira(KodairaType::I(2)).unwrap();
        let s = scale(&i2, 3).unwrap();
        assert!(s.vertices().iter().all(|v| v.mult == 3));
        assert_eq!(scale(&i2, 1).unwrap(), i2);
        let e = kodaira(KodairaType::I(0)).unwrap();
        let mf = scale(&e, 5).unwrap();
        assert_eq!(mf.vertices()[0].mult, 5);
        assert_eq!(scale(&scale(&i2, 2).unwrap(), 3).unwrap(), scale(&i2, 6).unwrap());
    }

    #[test]
    fn contract_chain_middle() {
        let g = graph(
            &[("A", 1, 0, -2), ("E", 2, 0, -1), ("B", 1, 0, -2)],
            &[("A", "E"), ("E", "B")],
            false,
        );
        let c = contract(&g, "E", p(2)).unwrap();
        assert!(c.smoothness_preserved);
        assert_eq!(c.graph.vertex("A").unwrap().self_int, -1);
        assert_eq!(c.graph.vertex("B").unwrap().self_int, -1);
        assert_eq!(c.graph.edges(), &[("A".to_string(), "B".to_string())]);
    }

    #[test]
    fn contract_tail() {
        for q in [2, 3, 5] {
            let tame = graph(&[("A", 1, 1, -1), ("E", 1, 0, -1)], &[("A", "E")], true);
            let c = contract(&tame, "E", p(q)).unwrap();
            assert!(c.smoothness_preserved);
            assert_eq!(c.graph.vertex("A").unwrap().self_int, 0);

            let wild = graph(&[("A", q, 1, -1), ("E", q, 0, -1)], &[("A", "E")], true);
            assert!(!contract(&wild, "E", p(q)).unwrap().smoothness_preserved);
        }
    }

    #[test]
    fn contract_refusals() {
        let star = kodaira(KodairaType::IV).unwrap();
        assert!(matches!(contract(&star, "E", p(2)), Err(Error::NotContractible(..))));
        assert!(matches!(contract(&star, "C1", p(2)), Err(Error::NotContractible(..))));
        let i1 = kodaira(KodairaType::I(1)).unwrap();
        assert!(matches!(contract(&i1, "E", p(2)), Err(Error::NotContractible(..))));
    }

    #[test]
    fn blow_up_then_contract_is_identity() {
        let g = kodaira(KodairaType::IStar(1)).unwrap();
        let (b, e) = g.blow_up_point("D1").unwrap();
        assert!(b.fibre_violations().is_empty());
        assert_eq!(contract(&b, &e, p(3)).unwrap().graph, g);
        let (b, e) = g.blow_up_crossing("D0", "D1").unwrap();
        assert!(b.fibre_violations().is_empty());
        assert_eq!(b.vertex(&e).unwrap().mult, 4);
        assert_eq!(contract(&b, &e, p(3)).unwrap().graph, g);
    }

    #[test]
    fn zeta_invariant_under_blow_up() {
        let g = kodaira(KodairaType::IStar(0)).unwrap();
        let (b, _) = g.blow_up_point("T1").unwrap();
        let (b, _) = b.blow_up_crossing("D0", "T2").unwrap();
        let q = p(5);
        assert_eq!(tame_zeta(&strata_model(&g, q).unwrap()), tame_zeta(&strata_model(&b, q).unwrap()));
        assert_eq!(tame_euler(&strata_model(&b, q).unwrap()).unwrap(), 0);
    }

    #[test]
    fn parse_symbols() {
        assert_eq!(KodairaType::parse("I", Some(3)).unwrap(), KodairaType::I(3));
        assert_eq!("I0*".parse::<KodairaType>().unwrap(), KodairaType::IStar(0));
        assert_eq!(KodairaType::parse("I*", Some(2)).unwrap(), KodairaType::IStar(2));
        assert_eq!("IV*".parse::<KodairaType>().unwrap(), KodairaType::IVStar);
        assert!("V".parse::<KodairaType>().is_err());
        assert!(KodairaType::parse("I", None).is_err());
        assert!(KodairaType::parse("II", Some(1)).is_err());
        assert!(KodairaType::parse("I2", Some(3)).is_err());
    }

    #[test]
    fn dot_export() {
        let g = graph(&[("A", 1, 0, -1), ("B", 1, 0, -1)], &[("A", "B")], true);
        assert_eq!(
            g.to_dot(),
            "graph fibre {\n  \"A\" [label=\"1:0:-1\"];\n  \"B\" [label=\"1:0:-1\"];\n  \"A\" -- \"B\";\n}\n"
        );
    }

    #[test]
    fn strict_fibre_enforced() {
        let bad = DualGraph::new(
            vec![Vertex::new("A", 1, 0, -2), Vertex::new("B", 1, 0, -1)],
            vec![("A".into(), "B".into())],
            false,
            true,
        );
        assert!(matches!(bad, Err(Error::InvalidGraph(_))));
    }
}
