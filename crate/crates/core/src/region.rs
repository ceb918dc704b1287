//! Superimposed page-1 pictures of `D•(i)` and `D•(i,k)` with the grey
//! region `p + q ≥ 0` and its intersections with the populated strips.
//!
//! The intersection list is copied from [`predicted_support`] or
//! [`dik_support`]; nothing here recomputes it.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cohomology::{dik_support, predicted_support, GridPoint};
use crate::complex::{build_d, build_d_ik, ComplexDescription, ComplexTerm, Part};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramTerm {
    pub p: i64,
    pub q: usize,
    pub part: Part,
    pub label: String,
    #[serde(with = "crate::bigint_string")]
    pub rank: num_bigint::BigUint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub from: (i64, i64),
    pub to: (i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionDiagram {
    pub f: usize,
    pub g: usize,
    pub i: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub terms: Vec<DiagramTerm>,
    pub splice_arrow: Option<Arrow>,
    pub intersections: Vec<GridPoint>,
}

fn term_label(t: &ComplexTerm) -> String {
    let ext = -t.position;
    let mut s = if ext == 0 {
        "R".to_string()
    } else {
        format!("Λ^{ext}F")
    };
    if t.w.entries().iter().any(|&e| e != 0) {
        let _ = write!(s, "⊗S{}G*", t.w);
    }
    s
}

fn terms_of(c: &ComplexDescription) -> Vec<DiagramTerm> {
    c.terms
        .iter()
        .map(|t| DiagramTerm {
            p: t.position,
            q: t.row,
            part: t.part,
            label: term_label(t),
            rank: t.rank.clone(),
        })
        .collect()
}

impl RegionDiagram {
    pub fn for_d(i: i64, f: usize, g: usize) -> Result<Self> {
        let c = build_d(i, f, g)?;
        let splice_arrow = c.splice.map(|s| Arrow {
            from: (s.from, g as i64 - 1),
            to: (s.to, 0),
        });
        let intersections = predicted_support(i, f, g)?.grid_points(g);
        Ok(Self {
            f,
            g,
            i,
            k: None,
            terms: terms_of(&c),
            splice_arrow,
            intersections,
        })
    }

    pub fn for_dik(i: i64, k: usize, f: usize, g: usize) -> Result<Self> {
        let c = build_d_ik(i, k, f, g)?;
        Ok(Self {
            f,
            g,
            i,
            k: Some(k),
            terms: terms_of(&c),
            splice_arrow: None,
            intersections: dik_support(i, k, f, g)?.intersections,
        })
    }

    fn term_at(&self, p: i64, q: i64) -> Option<&DiagramTerm> {
        self.terms.iter().find(|t| t.p == p && t.q as i64 == q)
    }

    fn is_intersection(&self, p: i64, q: i64) -> bool {
        self.intersections.iter().any(|pt| pt.p == p && pt.q == q)
    }

    /// ASCII grid: `K`, `C`, `M` for populated points, brackets for
    /// intersections, `:` for empty grey cells and `.` elsewhere.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = match self.k {
            Some(k) => writeln!(out, "D(i={}, k={k})  f={} g={}", self.i, self.f, self.g),
            None => writeln!(out, "D(i={})  f={} g={}", self.i, self.f, self.g),
        };
        let (lo, hi) = (-(self.f as i64), 0);
        for q in (0..self.g as i64).rev() {
            let _ = write!(out, "{q:>3} |");
            for p in lo..=hi {
                let cell = match self.term_at(p, q) {
                    Some(t) => {
                        let c = match t.part {
                            Part::K => 'K',
                            Part::C => 'C',
                            Part::Mid => 'M',
                        };
                        if self.is_intersection(p, q) {
                            format!("[{c}]")
                        } else {
                            format!(" {c} ")
                        }
                    }
                    None if p + q >= 0 => " : ".to_string(),
                    None => " . ".to_string(),
                };
                out.push_str(&cell);
            }
            out.push('\n');
        }
        let _ = write!(out, "    +");
        out.push_str(&"---".repeat((hi - lo + 1) as usize));
        out.push('\n');
        let _ = write!(out, "     ");
        for p in lo..=hi {
            let _ = write!(out, "{p:>3}");
        }
        out.push('\n');
        if let Some(a) = self.splice_arrow {
            let _ = writeln!(
                out,
                "splice: ({},{}) -> ({},{})",
                a.from.0, a.from.1, a.to.0, a.to.1
            );
        }
        let pts: Vec<String> = self
            .intersections
            .iter()
            .map(|pt| format!("({},{})", pt.p, pt.q))
            .collect();
        let _ = writeln!(
            out,
            "intersections: {} [{}]",
            self.intersections.len(),
            pts.join(" ")
        );
        out
    }

    pub fn render_svg(&self) -> String {
        const CELL: i64 = 40;
        const MARGIN: i64 = 40;
        let cols = self.f as i64 + 1;
        let rows = self.g as i64;
        let width = cols * CELL + 2 * MARGIN;
        let height = rows * CELL + 2 * MARGIN;
        let x = |p: i64| MARGIN + (p + self.f as i64) * CELL + CELL / 2;
        let y = |q: i64| MARGIN + (rows - 1 - q) * CELL + CELL / 2;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        for q in 0..rows {
            for p in -(self.f as i64)..=0 {
                if p + q >= 0 {
                    let _ = writeln!(
                        s,
                        r##"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="#d0d0d0"/>"##,
                        x(p) - CELL / 2,
                        y(q) - CELL / 2
                    );
                }
            }
        }
        for t in &self.terms {
            let (cx, cy) = (x(t.p), y(t.q as i64));
            let fill = match t.part {
                Part::K => "#1f4e9c",
                Part::C => "#9c1f1f",
                Part::Mid => "#1f8c3a",
            };
            let _ = writeln!(
                s,
                r#"<circle cx="{cx}" cy="{cy}" r="6" fill="{fill}"><title>{}</title></circle>"#,
                t.label
            );
        }
        for pt in &self.intersections {
            let _ = writeln!(
                s,
                r#"<circle cx="{}" cy="{}" r="12" fill="none" stroke="black" stroke-width="2"/>"#,
                x(pt.p),
                y(pt.q)
            );
        }
        if let Some(a) = self.splice_arrow {
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-dasharray="4 3"/>"#,
                x(a.from.0),
                y(a.from.1),
                x(a.to.0),
                y(a.to.1)
            );
        }
        for p in -(self.f as i64)..=0 {
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-size="11" text-anchor="middle">{p}</text>"#,
                x(p),
                height - MARGIN / 3
            );
        }
        s.push_str("</svg>\n");
        s
    }
}
