//! Hasse diagrams and dimension tables.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::polyq::QPoly;
use crate::poset::{enumerate_tm, Bound, ConductorData, Triple};
use crate::support::{dim_v, intertwine_v};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramNode {
    pub triple: Triple,
    #[serde(rename = "i_VV")]
    pub i_vv: QPoly,
}

/// `T_m` under a bound, with covering relations and the equivalences
/// between quotients that share `c3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagram {
    pub m: ConductorData,
    pub nodes: Vec<DiagramNode>,
    /// `(upper, lower)` with `lower` covered by `upper`.
    pub covers: Vec<(Triple, Triple)>,
    /// Unordered pairs with `c3 = d3` and `I(V_c, V_d) != 0`.
    pub equivalences: Vec<(Triple, Triple)>,
}

fn strictly_below(a: Triple, b: Triple) -> bool {
    a != b && a.leq(b)
}

pub fn build_diagram(m: &ConductorData, bound: Bound) -> Result<Diagram> {
    let tm = enumerate_tm(m, bound);
    let nodes = tm
        .iter()
        .map(|&c| Ok(DiagramNode { triple: c, i_vv: intertwine_v(c, c, m)?.i_vv }))
        .collect::<Result<Vec<_>>>()?;
    let mut covers = Vec::new();
    for &hi in &tm {
        for &lo in &tm {
            if strictly_below(lo, hi)
                && !tm.iter().any(|&e| strictly_below(lo, e) && strictly_below(e, hi))
            {
                covers.push((hi, lo));
            }
        }
    }
    let mut equivalences = Vec::new();
    for (i, &c) in tm.iter().enumerate() {
        for &d in &tm[i + 1..] {
            if c.c3() == d.c3() && !intertwine_v(c, d, m)?.i_vv.is_zero() {
                equivalences.push((c, d));
            }
        }
    }
    Ok(Diagram { m: *m, nodes, covers, equivalences })
}

fn node_id(t: Triple) -> String {
    format!("c{}_{}_{}", t.0[0], t.0[1], t.0[2])
}

impl Diagram {
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let b = self.m.base();
        let _ = writeln!(s, "digraph \"T_m{}\" {{", node_id(b).trim_start_matches('c'));
        let _ = writeln!(s, "  rankdir=TB;");
        let _ = writeln!(s, "  node [shape=box, fontname=\"monospace\"];");
        for n in &self.nodes {
            let _ = writeln!(
                s,
                "  {} [label=\"{}\\nI(V,V)={}\"];",
                node_id(n.triple),
                n.triple,
                n.i_vv
            );
        }
        for (hi, lo) in &self.covers {
            let _ = writeln!(s, "  {} -> {};", node_id(*hi), node_id(*lo));
        }
        for (c, d) in &self.equivalences {
            let _ = writeln!(
                s,
                "  {} -> {} [style=dashed, dir=none, constraint=false];",
                node_id(*c),
                node_id(*d)
            );
        }
        s.push_str("}\n");
        s
    }
}

/// DOT text of [`build_diagram`].
pub fn diagram_emit(m: &ConductorData, bound: Bound) -> Result<String> {
    Ok(build_diagram(m, bound)?.to_dot())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub triple: Triple,
    pub dim_poly: QPoly,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_at_q0: Option<String>,
}

/// `dim V_c` for every `c` in the bounded `T_m`, largest first; equal
/// dimensions sit together in lexicographic order.
pub fn table_rows(m: &ConductorData, bound: Bound, q0: Option<u64>) -> Result<Vec<TableRow>> {
    let mut rows = enumerate_tm(m, bound)
        .into_iter()
        .map(|c| {
            let dim = dim_v(c, m)?;
            let at = q0.map(|q| dim.eval(q).map(|v| v.to_string())).transpose()?;
            Ok(TableRow { triple: c, dim_poly: dim, dim_at_q0: at })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| {
        b.dim_poly
            .cmp_asymptotic(&a.dim_poly)
            .then_with(|| a.triple.cmp(&b.triple))
    });
    Ok(rows)
}

/// CSV with header `triple,dim_poly,dim_at_q0`.
pub fn table_emit(m: &ConductorData, bound: Bound, q0: Option<u64>) -> Result<String> {
    let rows = table_rows(m, bound, q0)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| crate::Error::Usage(format!("csv: {e}"));
    w.write_record(["triple", "dim_poly", "dim_at_q0"]).map_err(io)?;
    for r in &rows {
        let t = format!("{},{},{}", r.triple.0[0], r.triple.0[1], r.triple.0[2]);
        let poly = r.dim_poly.to_string();
        w.write_record([t.as_str(), poly.as_str(), r.dim_at_q0.as_deref().unwrap_or("")])
            .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| crate::Error::Usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_node_diagram() {
        let m = ConductorData::new(1, 1).unwrap();
        let d = build_diagram(&m, Bound::ComponentwiseMax(Triple::new(1, 1, 1))).unwrap();
        assert_eq!(d.nodes.len(), 1);
        assert!(d.nodes[0].i_vv.is_one());
        assert!(d.covers.is_empty());
        assert!(d.to_dot().contains("label=\"(1,1,1)\\nI(V,V)=1\""));
    }

    #[test]
    fn empty_table_is_header_only() {
        let m = ConductorData::new(2, 2).unwrap();
        let csv = table_emit(&m, Bound::SumMax(3), None).unwrap();
        assert_eq!(csv, "triple,dim_poly,dim_at_q0\n");
    }

    #[test]
    fn dot_is_deterministic() {
        let m = ConductorData::new(1, 2).unwrap();
        let a = diagram_emit(&m, Bound::SumMax(7)).unwrap();
        let b = diagram_emit(&m, Bound::SumMax(7)).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("digraph"));
    }
}
