//! JSON formats for graphs, drawings and verdicts. Coordinates are `p/q`
//! strings; objects keep insertion order so output is byte-stable.

use serde_json::{json, Map, Value};

use crate::checkers::Verdict;
use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::frame;
use crate::framework::{Concept, FrameworkGraph};
use crate::geom::{parse_q, q_to_string, Point};
use crate::graph::Graph;
use crate::layouts::LayoutVariant;

/// Construction parameters carried in the `meta` object.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Meta {
    pub concept: Option<Concept>,
    pub ell: Option<usize>,
    pub k: Option<usize>,
    pub variant: Option<LayoutVariant>,
}

fn point_value(p: &Point) -> Value {
    json!([q_to_string(&p.x), q_to_string(&p.y)])
}

pub fn graph_value(g: &Graph, fg: Option<&FrameworkGraph>, variant: Option<LayoutVariant>) -> Value {
    let vertices: Vec<&str> = g.labels().iter().map(String::as_str).collect();
    let edges: Vec<Value> = g.edges().iter().map(|&(u, v)| json!([g.label(u), g.label(v)])).collect();
    let mut out = Map::new();
    out.insert("vertices".into(), json!(vertices));
    out.insert("edges".into(), Value::Array(edges));
    if let Some(fg) = fg {
        let mut meta = Map::new();
        meta.insert("concept".into(), json!(fg.concept.map(|c| c.short_name())));
        meta.insert("ell".into(), json!(fg.ell));
        meta.insert("k".into(), json!(fg.k));
        if let Some(v) = variant {
            meta.insert("variant".into(), json!(v.name()));
        }
        let vc: Vec<Value> =
            fg.vertex_conn.iter().map(|c| c.map_or(Value::Null, |c| json!(frame::connection_label(c)))).collect();
        let ec: Vec<String> = fg.edge_conn.iter().map(|&c| frame::connection_label(c)).collect();
        meta.insert("vertex_connection".into(), Value::Array(vc));
        meta.insert("edge_connection".into(), json!(ec));
        meta.insert("edge_path".into(), json!(fg.edge_path));
        out.insert("meta".into(), Value::Object(meta));
    }
    Value::Object(out)
}

pub fn drawing_value(d: &Drawing, fg: Option<&FrameworkGraph>, variant: Option<LayoutVariant>) -> Value {
    let g = &d.graph;
    let positions: Map<String, Value> =
        (0..g.n()).map(|v| (g.label(v).to_string(), point_value(&d.positions[v]))).collect();
    let curves: Map<String, Value> =
        (0..g.m()).map(|e| (g.edge_key(e), Value::Array(d.curves[e].iter().map(point_value).collect()))).collect();
    json!({
        "graph": graph_value(g, fg, variant),
        "positions": positions,
        "curves": curves,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn verdict_value(v: &Verdict) -> Value {
    serde_json::to_value(v).expect("verdicts serialize")
}

fn err(path: &str, what: &str) -> Error {
    Error::Format(format!("{path}: {what}"))
}

fn parse_text(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| Error::Format(format!("line {} column {}: {e}", e.line(), e.column())))
}

fn as_str<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| err(path, "expected a string"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn parse_point(v: &Value, path: &str) -> Result<Point> {
    let a = as_array(v, path)?;
    if a.len() != 2 {
        return Err(err(path, "expected [x, y]"));
    }
    let c = |i: usize| -> Result<crate::geom::Q> {
        let p = format!("{path}[{i}]");
        match &a[i] {
            Value::String(s) => parse_q(s).ok_or_else(|| err(&p, "expected a rational \"p/q\"")),
            Value::Number(n) => {
                n.as_i64().map(crate::geom::q).ok_or_else(|| err(&p, "non-integer numbers are not exact; use \"p/q\""))
            }
            _ => Err(err(&p, "expected a rational")),
        }
    };
    Ok(Point::new(c(0)?, c(1)?))
}

pub fn parse_graph(v: &Value) -> Result<(Graph, Meta)> {
    let obj = v.as_object().ok_or_else(|| err("graph", "expected an object"))?;
    let mut g = Graph::new();
    let vs = as_array(obj.get("vertices").ok_or_else(|| err("graph", "missing `vertices`"))?, "graph.vertices")?;
    for (i, x) in vs.iter().enumerate() {
        g.add_vertex(as_str(x, &format!("graph.vertices[{i}]"))?)
            .map_err(|e| err(&format!("graph.vertices[{i}]"), &e.to_string()))?;
    }
    let es = as_array(obj.get("edges").ok_or_else(|| err("graph", "missing `edges`"))?, "graph.edges")?;
    for (i, x) in es.iter().enumerate() {
        let path = format!("graph.edges[{i}]");
        let pair = as_array(x, &path)?;
        if pair.len() != 2 {
            return Err(err(&path, "expected [u, v]"));
        }
        let id = |j: usize| -> Result<usize> {
            let l = as_str(&pair[j], &path)?;
            g.vertex(l).ok_or_else(|| err(&path, &format!("unknown vertex `{l}`")))
        };
        let (u, w) = (id(0)?, id(1)?);
        g.add_edge(u, w).map_err(|e| err(&path, &e.to_string()))?;
    }
    let mut meta = Meta::default();
    if let Some(m) = obj.get("meta").and_then(Value::as_object) {
        if let Some(c) = m.get("concept").and_then(Value::as_str) {
            meta.concept = Some(c.parse().map_err(|e: Error| err("graph.meta.concept", &e.to_string()))?);
        }
        meta.ell = m.get("ell").and_then(Value::as_u64).map(|x| x as usize);
        meta.k = m.get("k").and_then(Value::as_u64).map(|x| x as usize);
        if let Some(v) = m.get("variant").and_then(Value::as_str) {
            meta.variant = Some(v.parse().map_err(|e: Error| err("graph.meta.variant", &e.to_string()))?);
        }
    }
    Ok((g, meta))
}

pub fn parse_graph_json(s: &str) -> Result<(Graph, Meta)> {
    parse_graph(&parse_text(s)?)
}

pub fn parse_drawing_json(s: &str) -> Result<(Drawing, Meta)> {
    let v = parse_text(s)?;
    let obj = v.as_object().ok_or_else(|| err("$", "expected an object"))?;
    let (g, meta) = parse_graph(obj.get("graph").ok_or_else(|| err("$", "missing `graph`"))?)?;
    let pos = obj.get("positions").and_then(Value::as_object).ok_or_else(|| err("positions", "expected an object"))?;
    let mut positions = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let l = g.label(v);
        let path = format!("positions.{l}");
        positions.push(parse_point(pos.get(l).ok_or_else(|| err(&path, "missing"))?, &path)?);
    }
    let cur = obj.get("curves").and_then(Value::as_object).ok_or_else(|| err("curves", "expected an object"))?;
    let mut curves = Vec::with_capacity(g.m());
    for e in 0..g.m() {
        let key = g.edge_key(e);
        let path = format!("curves.{key}");
        let pts = as_array(cur.get(&key).ok_or_else(|| err(&path, "missing"))?, &path)?;
        curves.push(
            pts.iter().enumerate().map(|(i, p)| parse_point(p, &format!("{path}[{i}]"))).collect::<Result<Vec<_>>>()?,
        );
    }
    let d = Drawing::new(g, positions, curves)?;
    Ok((d, meta))
}
