//! JSON input files for log models and dual graphs.
//!
//! Both formats carry `"schema": 1`, reject unknown fields and reject
//! floating-point literals. Errors are classified as syntax
//! ([`Error::Parse`]), shape ([`Error::Schema`], with the JSON path) or
//! invariant failures ([`Error::Semantic`]).

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::dualgraph::{DualGraph, Vertex};
use crate::error::{Error, Result};
use crate::fan::{Chart, FanPoint, KatoFan};
use crate::lattice::IntVec;
use crate::model::{LogModel, StratumData};
use crate::monoid::{AffineMonoid, Face};
use crate::prime::Prime;

pub const SCHEMA_VERSION: u64 = 1;

/// An integer of any size. Serialized as a bare JSON number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        let text = n.to_string();
        let digits = text.strip_prefix('-').unwrap_or(&text);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(serde::de::Error::custom(format!(
                "expected an integer, found `{text}`"
            )));
        }
        BigInt::from_str(&text)
            .map(JsonInt)
            .map_err(serde::de::Error::custom)
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = serde_json::Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

fn unwrap_ints(v: &[JsonInt]) -> IntVec {
    v.iter().map(|x| x.0.clone()).collect()
}

fn wrap_ints(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChartFile {
    pub gens: Vec<Vec<JsonInt>>,
    pub v1: Vec<JsonInt>,
    pub face: Vec<usize>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub etale: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointFile {
    pub id: String,
    pub codim: u32,
    pub msharp: u64,
    pub chi_open: i64,
    pub dim_closed: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chart: Option<ChartFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub schema: u64,
    pub p: u64,
    pub points: Vec<PointFile>,
    pub specializations: Vec<(String, String)>,
    #[serde(default)]
    pub log_smooth_claimed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexFile {
    pub id: String,
    pub mult: u64,
    pub genus: u32,
    #[serde(rename = "self")]
    pub self_int: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub schema: u64,
    pub p: u64,
    pub vertices: Vec<VertexFile>,
    pub edges: Vec<(String, String)>,
    #[serde(default)]
    pub strict_fibre: bool,
    #[serde(default)]
    pub allow_loops: bool,
}

/// A parsed dual-graph file: the graph and its residue characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphInput {
    pub graph: DualGraph,
    pub p: Prime,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Model(LogModel),
    Graph(GraphInput),
}

fn as_text(bytes: &[u8]) -> Result<&str> {
    std::str::from_utf8(bytes).map_err(|e| {
        let (line, column) = position(&bytes[..e.valid_up_to()]);
        Error::Parse {
            line,
            column,
            message: "input is not valid UTF-8".into(),
        }
    })
}

fn position(prefix: &[u8]) -> (usize, usize) {
    let line = 1 + prefix.iter().filter(|&&b| b == b'\n').count();
    let column = 1 + prefix.iter().rev().take_while(|&&b| b != b'\n').count();
    (line, column)
}

fn syntax_error(e: &serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn from_text<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value: T = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if inner.is_syntax() || inner.is_eof() || inner.is_io() {
            syntax_error(&inner)
        } else {
            Error::Schema {
                path,
                message: inner.to_string(),
            }
        }
    })?;
    de.end().map_err(|e| syntax_error(&e))?;
    Ok(value)
}

fn check_schema(version: u64) -> Result<()> {
    if version == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(Error::Schema {
            path: "schema".into(),
            message: format!("unsupported schema version {version}, expected {SCHEMA_VERSION}"),
        })
    }
}

fn semantic(context: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| Error::Semantic(format!("{context}: {e}"))
}

fn prime(p: u64) -> Result<Prime> {
    Prime::new(p).map_err(|_| Error::Semantic(format!("p must be prime, found {p}")))
}

pub fn parse_model(bytes: &[u8]) -> Result<LogModel> {
    model_from_file(from_text(as_text(bytes)?)?)
}

pub fn parse_graph(bytes: &[u8]) -> Result<GraphInput> {
    graph_from_file(from_text(as_text(bytes)?)?)
}

/// Parses either format, telling them apart by the `vertices` key.
pub fn parse_any(bytes: &[u8]) -> Result<Input> {
    let text = as_text(bytes)?;
    let value: Value = serde_json::from_str(text).map_err(|e| syntax_error(&e))?;
    if value.as_object().is_some_and(|o| o.contains_key("vertices")) {
        graph_from_file(from_text(text)?).map(Input::Graph)
    } else {
        model_from_file(from_text(text)?).map(Input::Model)
    }
}

fn chart_from_file(c: &ChartFile) -> Result<Chart> {
    let dim = c.v1.len();
    let gens: Vec<IntVec> = c.gens.iter().map(|g| unwrap_ints(g)).collect();
    let monoid = AffineMonoid::new(dim, gens)?;
    Chart::new(monoid, unwrap_ints(&c.v1), Face::new(c.face.clone()), c.etale)
}

pub fn model_from_file(f: ModelFile) -> Result<LogModel> {
    check_schema(f.schema)?;
    let p = prime(f.p)?;
    let mut points = Vec::with_capacity(f.points.len());
    let mut strata = Vec::with_capacity(f.points.len());
    for pt in &f.points {
        let mut fp = FanPoint::new(pt.id.clone(), pt.codim, pt.msharp);
        if let Some(c) = &pt.chart {
            let chart = chart_from_file(c).map_err(semantic(&format!("point `{}`", pt.id)))?;
            fp = fp.with_chart(chart);
        }
        points.push(fp);
        strata.push(StratumData {
            point_id: pt.id.clone(),
            chi_open: pt.chi_open,
            dim_closed: pt.dim_closed,
            genus: pt.genus,
        });
    }
    let fan = KatoFan::new(points, f.specializations).map_err(semantic("fan"))?;
    LogModel::new(fan, strata, p, f.log_smooth_claimed).map_err(semantic("model"))
}

pub fn graph_from_file(f: GraphFile) -> Result<GraphInput> {
    check_schema(f.schema)?;
    let p = prime(f.p)?;
    let vertices = f
        .vertices
        .into_iter()
        .map(|v| Vertex::new(v.id, v.mult, v.genus, v.self_int))
        .collect();
    let graph = DualGraph::new(vertices, f.edges, f.allow_loops, f.strict_fibre)
        .map_err(semantic("graph"))?;
    Ok(GraphInput { graph, p })
}

pub fn model_to_file(m: &LogModel) -> ModelFile {
    let points = m
        .fan()
        .points()
        .iter()
        .map(|pt| {
            let s = m.stratum(&pt.id);
            PointFile {
                id: pt.id.clone(),
                codim: pt.codim,
                msharp: pt.msharp,
                chi_open: s.chi_open,
                dim_closed: s.dim_closed,
                genus: s.genus,
                chart: pt.chart.as_ref().map(|c| ChartFile {
                    gens: c.monoid().generators().iter().map(|g| wrap_ints(g)).collect(),
                    v1: wrap_ints(c.v1()),
                    face: c.face().generator_indices.clone(),
                    etale: c.etale_marked(),
                }),
            }
        })
        .collect();
    ModelFile {
        schema: SCHEMA_VERSION,
        p: m.p().get(),
        points,
        specializations: m.fan().specializations().to_vec(),
        log_smooth_claimed: m.log_smooth_claimed(),
    }
}

pub fn graph_to_file(g: &DualGraph, p: Prime) -> GraphFile {
    GraphFile {
        schema: SCHEMA_VERSION,
        p: p.get(),
        vertices: g
            .vertices()
            .iter()
            .map(|v| VertexFile {
                id: v.id.clone(),
                mult: v.mult,
                genus: v.genus,
                self_int: v.self_int,
            })
            .collect(),
        edges: g.edges().to_vec(),
        strict_fibre: g.strict_fibre(),
        allow_loops: g.allow_loops(),
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types serialize");
    s.push('\n');
    s
}

pub fn render_model(m: &LogModel) -> String {
    pretty(&model_to_file(m))
}

pub fn render_graph(g: &DualGraph, p: Prime) -> String {
    pretty(&graph_to_file(g, p))
}
