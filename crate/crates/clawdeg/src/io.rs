//! File formats: JSON documents, cdd-style `.ext`/`.ine`, CSV tables.
//!
//! Rationals are written as `p/q` strings (`p` alone when `q = 1`) so every
//! format round-trips exactly.

use std::fmt::Write as _;

use clawdeg_core::geometry::{fmt_rat, parse_rat, HPolytope, HalfSpace, Rat, RatPoint, VPolytope};
use clawdeg_core::linalg;
use clawdeg_core::volume::Triangulation;
use clawdeg_core::Error;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub type Result<T> = std::result::Result<T, Error>;

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| bad(format!("not an integer: {s:?}")))
}

fn point_strings(p: &RatPoint) -> Vec<String> {
    p.coords().iter().map(fmt_rat).collect()
}

fn parse_point(coords: &[String]) -> Result<RatPoint> {
    Ok(RatPoint::new(coords.iter().map(|s| parse_rat(s)).collect::<std::result::Result<_, _>>()?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfSpaceDoc {
    pub normal: Vec<String>,
    pub offset: String,
}

/// `normal · x <= offset` for every half-space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum PolytopeDoc {
    V { dim: usize, vertices: Vec<Vec<String>> },
    H { dim: usize, halfspaces: Vec<HalfSpaceDoc> },
}

pub fn v_doc(p: &VPolytope) -> PolytopeDoc {
    PolytopeDoc::V {
        dim: p.dim(),
        vertices: p.vertices().iter().map(point_strings).collect(),
    }
}

pub fn h_doc(h: &HPolytope) -> PolytopeDoc {
    PolytopeDoc::H {
        dim: h.dim(),
        halfspaces: h
            .halfspaces()
            .iter()
            .map(|hs| HalfSpaceDoc {
                normal: hs.normal().iter().map(|a| a.to_string()).collect(),
                offset: hs.offset().to_string(),
            })
            .collect(),
    }
}

pub(crate) fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn v_to_json(p: &VPolytope) -> String {
    json(&v_doc(p))
}

pub fn h_to_json(h: &HPolytope) -> String {
    json(&h_doc(h))
}

fn doc_from_json(s: &str) -> Result<PolytopeDoc> {
    serde_json::from_str(s).map_err(|e| bad(format!("bad polytope JSON: {e}")))
}

pub fn v_from_json(s: &str) -> Result<VPolytope> {
    match doc_from_json(s)? {
        PolytopeDoc::V { dim, vertices } => {
            VPolytope::new(dim, vertices.iter().map(|v| parse_point(v)).collect::<Result<_>>()?)
        }
        PolytopeDoc::H { .. } => Err(bad("expected a V-polytope document")),
    }
}

pub fn h_from_json(s: &str) -> Result<HPolytope> {
    match doc_from_json(s)? {
        PolytopeDoc::H { dim, halfspaces } => {
            let hs = halfspaces
                .iter()
                .map(|h| {
                    let normal = h.normal.iter().map(|a| parse_int(a)).collect::<Result<_>>()?;
                    HalfSpace::new(normal, parse_int(&h.offset)?)
                })
                .collect::<Result<_>>()?;
            HPolytope::new(dim, hs)
        }
        PolytopeDoc::V { .. } => Err(bad("expected an H-polytope document")),
    }
}

/// `V-representation` block; each row is `1 x_1 ... x_d`.
pub fn to_ext(p: &VPolytope) -> String {
    let mut s = String::from("V-representation\nbegin\n");
    writeln!(s, "{} {} rational", p.len(), p.dim() + 1).unwrap();
    for v in p.vertices() {
        s.push('1');
        for x in v.coords() {
            write!(s, " {}", fmt_rat(x)).unwrap();
        }
        s.push('\n');
    }
    s.push_str("end\n");
    s
}

/// `H-representation` block; each row `b -a_1 ... -a_d` stands for
/// `b - a·x >= 0`.
pub fn to_ine(h: &HPolytope) -> String {
    let mut s = String::from("H-representation\nbegin\n");
    writeln!(s, "{} {} integer", h.len(), h.dim() + 1).unwrap();
    for hs in h.halfspaces() {
        s.push_str(&hs.offset().to_string());
        for a in hs.normal() {
            write!(s, " {}", -a).unwrap();
        }
        s.push('\n');
    }
    s.push_str("end\n");
    s
}

/// Rows of a cdd block, after checking the header kind and the row count.
fn cdd_rows(s: &str, kind: &str) -> Result<(usize, Vec<Vec<Rat>>)> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('*'));
    loop {
        let l = lines.next().ok_or_else(|| bad("missing 'begin'"))?;
        if l == "begin" {
            break;
        }
        if l.ends_with("-representation") && l != kind {
            return Err(bad(format!("expected {kind}, found {l}")));
        }
    }
    let header: Vec<&str> = lines.next().ok_or_else(|| bad("missing size line"))?.split_whitespace().collect();
    let [m, cols, ty] = header[..] else {
        return Err(bad("size line must be 'm d+1 type'"));
    };
    if !matches!(ty, "integer" | "rational") {
        return Err(bad(format!("unsupported number type {ty}")));
    }
    let m: usize = m.parse().map_err(|_| bad("bad row count"))?;
    let cols: usize = cols.parse().map_err(|_| bad("bad column count"))?;
    if cols == 0 {
        return Err(bad("zero columns"));
    }
    let mut rows = Vec::with_capacity(m);
    for _ in 0..m {
        let l = lines.next().ok_or_else(|| bad("too few rows"))?;
        let row: Vec<Rat> = l.split_whitespace().map(parse_rat).collect::<std::result::Result<_, _>>()?;
        if row.len() != cols {
            return Err(bad(format!("row has {} entries, expected {cols}", row.len())));
        }
        rows.push(row);
    }
    if lines.next() != Some("end") {
        return Err(bad("missing 'end'"));
    }
    Ok((cols - 1, rows))
}

pub fn from_ext(s: &str) -> Result<VPolytope> {
    let (d, rows) = cdd_rows(s, "V-representation")?;
    let one = Rat::from_integer(1.into());
    let pts = rows
        .into_iter()
        .map(|r| {
            if r[0] != one {
                return Err(bad("only vertex rows (leading 1) are supported"));
            }
            Ok(RatPoint::new(r[1..].to_vec()))
        })
        .collect::<Result<_>>()?;
    VPolytope::new(d, pts)
}

pub fn from_ine(s: &str) -> Result<HPolytope> {
    let (d, rows) = cdd_rows(s, "H-representation")?;
    let hs = rows
        .into_iter()
        .map(|r| {
            // b - a·x >= 0  <=>  a·x <= b; integer rows are kept as written
            let ints: Vec<BigInt> = if r.iter().all(Rat::is_integer) {
                r.iter().map(|x| x.to_integer()).collect()
            } else {
                linalg::integer_row(&r)
            };
            let offset = ints[0].clone();
            HalfSpace::new(ints[1..].iter().map(|x| -x).collect(), offset)
        })
        .collect::<Result<_>>()?;
    HPolytope::new(d, hs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationDoc {
    pub dim: usize,
    pub vertices: Vec<Vec<String>>,
    pub simplices: Vec<Vec<usize>>,
    pub lattice_volume: String,
}

pub fn triangulation_doc(t: &Triangulation) -> TriangulationDoc {
    TriangulationDoc {
        dim: t.base().dim(),
        vertices: t.base().vertices().iter().map(point_strings).collect(),
        simplices: t.index_tuples().to_vec(),
        lattice_volume: fmt_rat(&t.lattice_volume()),
    }
}

pub fn triangulation_to_json(t: &Triangulation) -> String {
    json(&triangulation_doc(t))
}

pub fn triangulation_from_json(s: &str) -> Result<TriangulationDoc> {
    serde_json::from_str(s).map_err(|e| bad(format!("bad triangulation JSON: {e}")))
}

pub fn table_to_csv(group: &str, rows: &[(usize, BigInt)]) -> String {
    let mut s = String::from("group,n,degree\n");
    for (n, d) in rows {
        writeln!(s, "{group},{n},{d}").unwrap();
    }
    s
}

pub fn table_from_csv(s: &str) -> Result<Vec<(String, usize, BigInt)>> {
    let mut lines = s.lines();
    if lines.next() != Some("group,n,degree") {
        return Err(bad("missing CSV header"));
    }
    lines
        .filter(|l| !l.is_empty())
        .map(|l| {
            let [g, n, d] = l.split(',').collect::<Vec<_>>()[..] else {
                return Err(bad(format!("bad CSV row {l:?}")));
            };
            Ok((g.to_string(), n.parse().map_err(|_| bad("bad n"))?, parse_int(d)?))
        })
        .collect()
}
