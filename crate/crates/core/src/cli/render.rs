use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;

use super::report::Report;
use crate::cohomology::{generator_pieces, AlgebraKind, FreeGradedAlgebra, GeneratorPiece};
use crate::homotopy::SpaceTag;
use crate::liegroups::parse_group_spec;
use crate::series::poincare_series;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

pub fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Text => render_text(r),
        Format::Json => render_json(r),
        Format::Latex => render_latex(r),
    }
}

/// Renders several reports; JSON output becomes a single array.
pub fn render_reports(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => reports
            .iter()
            .map(render_text)
            .collect::<Vec<_>>()
            .join(&format!("{}\n", "-".repeat(60))),
        Format::Latex => reports
            .iter()
            .map(render_latex)
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn render_json(r: &Report) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

fn algebra_of(r: &Report) -> FreeGradedAlgebra {
    FreeGradedAlgebra::from_generators(r.algebra.generators.iter().copied())
}

fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let names: Vec<&str> = r.group.factors.iter().map(|f| f.name.as_str()).collect();
    let cartan: Vec<&str> = r.group.factors.iter().map(|f| f.cartan.as_str()).collect();
    let _ = writeln!(
        out,
        "group         {}  [{}]  (input: {})",
        r.group.canonical,
        cartan.join(" x "),
        names.join(" x ")
    );
    let _ = writeln!(
        out,
        "              rank {}, dimension {}, |Z(G)| = {}",
        r.group.rank, r.group.dimension, r.group.center_order
    );
    let exponents: Vec<String> = r
        .group
        .factors
        .iter()
        .map(|f| {
            let e: Vec<String> = f.exponents.iter().map(u32::to_string).collect();
            format!("{}: {{{}}}", f.cartan, e.join(","))
        })
        .collect();
    let _ = writeln!(out, "exponents     {}", exponents.join("; "));
    let _ = writeln!(out, "b2            {}", r.b2);
    let _ = writeln!(out, "space         {} ({})", r.space, r.space.description());
    if let Some(alias) = r.space.alias_of() {
        let _ = writeln!(out, "              rationally identical to `{alias}`");
    }
    let _ = writeln!(out, "connectivity  {}", r.connectivity);

    let _ = writeln!(out);
    let _ = writeln!(out, "rational homotopy (rank of π_j ⊗ Q)");
    if r.homotopy_ranks.is_empty() {
        let _ = writeln!(out, "  all groups vanish");
    } else {
        let _ = writeln!(out, "  {:>6}  {:>6}", "degree", "rank");
        for (d, rank) in &r.homotopy_ranks {
            let _ = writeln!(out, "  {d:>6}  {rank:>6}");
        }
        let total: u64 = r.homotopy_ranks.iter().map(|&(_, c)| c).sum();
        let _ = writeln!(out, "  {:>6}  {total:>6}", "total");
    }

    let _ = writeln!(out);
    if r.algebra.generators.is_empty() {
        let _ = writeln!(out, "H* = Q (trivial)");
    } else {
        let _ = writeln!(
            out,
            "cohomology    {} algebra, {} generators",
            r.algebra.kind, r.algebra.total
        );
        let _ = writeln!(out, "  {:>6}  {:>6}", "degree", "count");
        for (d, c) in &r.algebra.generators {
            let _ = writeln!(out, "  {d:>6}  {c:>6}");
        }
    }
    let _ = writeln!(out, "minimal model same generators, d = 0 (formal)");
    let _ = writeln!(out, "Poincaré      {}", poincare_series(&algebra_of(r)));
    if let Some(betti) = &r.poincare {
        let _ = writeln!(
            out,
            "Betti numbers b_0..b_{}",
            betti.len().saturating_sub(1)
        );
        for (j, b) in betti.iter().enumerate() {
            let _ = writeln!(out, "  {j:>6}  {b}");
        }
    }
    if !r.caveats.is_empty() {
        let _ = writeln!(out);
        let _ = writeln!(out, "caveats");
        for c in &r.caveats {
            let _ = writeln!(out, "  - {c}");
        }
    }
    out
}

fn subscript(index: &str) -> String {
    if index.chars().count() == 1 {
        format!("_{index}")
    } else {
        format!("_{{{index}}}")
    }
}

fn b2_multiple(m: u64) -> String {
    if m == 1 {
        "b_2".to_string()
    } else {
        format!("{m}b_2")
    }
}

// Generator names for one piece, plus the degree annotations.
fn piece_terms(piece: &GeneratorPiece, b2: u32) -> (Vec<String>, Vec<String>) {
    let per_b2 = |d: u32| {
        if b2 == 0 {
            0
        } else {
            piece.per_b2.get(&d).copied().unwrap_or(0)
        }
    };
    let constant = |d: u32| piece.constant.get(&d).copied().unwrap_or(0);
    let degrees: Vec<u32> = piece
        .degrees()
        .filter(|&d| per_b2(d) + constant(d) > 0)
        .collect();
    let letter = piece.letter;
    let multi = degrees.len() > 1;
    let mut terms = Vec::new();
    let mut annotations = Vec::new();
    let (mut indexed, mut single) = (false, false);

    for &d in &degrees {
        let (m, c) = (per_b2(d), constant(d));
        let name = |index: &str| {
            if multi {
                format!("{letter}_{{{d},{index}}}")
            } else {
                format!("{letter}{}", subscript(index))
            }
        };
        if m == 0 && c == 1 {
            terms.push(if multi {
                format!("{letter}_{{{d}}}")
            } else {
                letter.to_string()
            });
            if multi {
                single = true;
            } else {
                annotations.push(format!("\\deg {letter} = {d}"));
            }
            continue;
        }
        if m > 0 {
            let top = b2_multiple(m);
            terms.push(format!("{},\\ldots ,{}", name("1"), name(&top)));
            let listed: Vec<String> = (1..=c).map(|i| format!("{top}+{i}")).collect();
            if c <= 3 {
                terms.extend(listed.iter().map(|i| name(i)));
            } else {
                terms.push(format!(
                    "{},\\ldots ,{}",
                    name(&listed[0]),
                    name(&listed[listed.len() - 1])
                ));
            }
        } else if c <= 3 {
            terms.extend((1..=c).map(|i| name(&i.to_string())));
        } else {
            terms.push(format!("{},\\ldots ,{}", name("1"), name(&c.to_string())));
        }
        if multi {
            indexed = true;
        } else {
            annotations.push(format!("\\deg {letter}_i = {d}"));
        }
    }
    match (indexed, single) {
        (true, true) => {
            annotations.push(format!("\\deg {letter}_{{d,i}} = \\deg {letter}_{{d}} = d"))
        }
        (true, false) => annotations.push(format!("\\deg {letter}_{{d,i}} = d")),
        (false, true) => annotations.push(format!("\\deg {letter}_{{d}} = d")),
        (false, false) => {}
    }
    (terms, annotations)
}

fn fallback_pieces(r: &Report) -> Vec<GeneratorPiece> {
    let (odd, even): (BTreeMap<u32, u64>, BTreeMap<u32, u64>) = r
        .algebra
        .generators
        .iter()
        .copied()
        .partition(|(d, _)| d % 2 == 1);
    [('w', odd), ('x', even)]
        .into_iter()
        .filter(|(_, m)| !m.is_empty())
        .map(|(letter, constant)| GeneratorPiece {
            letter,
            constant,
            per_b2: BTreeMap::new(),
        })
        .collect()
}

fn render_latex(r: &Report) -> String {
    let pieces = match parse_group_spec(&r.group.canonical) {
        Ok(g) => generator_pieces(r.space, &g),
        Err(_) => fallback_pieces(r),
    };
    let mut terms = Vec::new();
    let mut annotations = Vec::new();
    let mut uses_b2 = false;
    for piece in &pieces {
        let (t, a) = piece_terms(piece, r.b2);
        uses_b2 |= t.iter().any(|s| s.contains("b_2"));
        terms.extend(t);
        annotations.extend(a);
    }
    let space = r.space.latex();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "% {} over M with b_2(M) = {}, space {}",
        r.group.canonical, r.b2, r.space
    );
    let body = terms.join(", ");
    let algebra = match r.algebra.kind {
        _ if terms.is_empty() => "\\mathbb{Q}".to_string(),
        AlgebraKind::Exterior => format!("\\wedge ({body})"),
        AlgebraKind::Polynomial => format!("\\mathbb{{Q}}[{body}]"),
        AlgebraKind::MixedFree => format!("\\Lambda ({body})"),
    };
    let mut line = format!("H^{{*}}({space}) = {algebra}");
    if !annotations.is_empty() {
        let _ = write!(line, ", \\quad {}", annotations.join(",\\ "));
    }
    if uses_b2 {
        let _ = write!(line, ", \\quad b_2 = {}", r.b2);
    }
    let _ = writeln!(out, "{line}");
    if matches!(
        r.space,
        SpaceTag::Gauge | SpaceTag::GaugeTilde | SpaceTag::G0
    ) {
        let whole = match r.space {
            SpaceTag::G0 => "\\mathcal{G}_0",
            SpaceTag::GaugeTilde => "\\tilde{\\mathcal{G}}",
            _ => "\\mathcal{G}",
        };
        let copies = match r.connectivity {
            crate::homotopy::Connectivity::Connected => "1".to_string(),
            crate::homotopy::Connectivity::FiniteUnknown => format!("|\\pi_0({whole})|"),
        };
        let _ = writeln!(
            out,
            "H^{{*}}({whole}) = \\oplus_{{{copies}}} H^{{*}}({space})"
        );
    }
    for (d, rank) in &r.homotopy_ranks {
        let group = match rank {
            1 => "\\mathbb{Q}".to_string(),
            n => format!("\\mathbb{{Q}}^{{{n}}}"),
        };
        let _ = writeln!(out, "\\pi_{{{d}}}({space})\\otimes\\mathbb{{Q}} = {group}");
    }
    if let Some(betti) = &r.poincare {
        let coeffs: Vec<String> = betti.iter().map(|b| b.to_string()).collect();
        let _ = writeln!(
            out,
            "% Betti numbers b_0..b_{}: {}",
            betti.len().saturating_sub(1),
            coeffs.join(", ")
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::report::build_report;
    use crate::homotopy::BaseData;

    fn report(g: &str, b2: u32, space: SpaceTag, series: Option<usize>) -> Report {
        build_report(
            &parse_group_spec(g).unwrap(),
            BaseData::new(b2),
            space,
            series,
            None,
        )
    }

    #[test]
    fn su2_gauge_latex() {
        let s = render_report(&report("SU(2)", 5, SpaceTag::Gauge, None), Format::Latex);
        assert!(s.contains("\\wedge (z_1,\\ldots ,z_{b_2}, w)"), "{s}");
        assert!(s.contains("\\deg z_i = 1"), "{s}");
        assert!(s.contains("\\deg w = 3"), "{s}");
        assert!(s.contains("b_2 = 5"), "{s}");
        assert!(s.contains("|\\pi_0(\\mathcal{G})|"), "{s}");
    }

    #[test]
    fn su2_quotient_latex() {
        let s = render_report(&report("SU(2)", 3, SpaceTag::BStar, None), Format::Latex);
        assert!(s.contains("\\mathbb{Q}[x_1,\\ldots ,x_{b_2}, y]"), "{s}");
        assert!(s.contains("\\deg y = 4"), "{s}");
        let s = render_report(&report("SU(2)", 3, SpaceTag::BTilde, None), Format::Latex);
        assert!(s.contains("\\mathbb{Q}[x_1,\\ldots ,x_{b_2}]"), "{s}");
    }

    #[test]
    fn e8_latex_uses_degree_indices() {
        let s = render_report(&report("E8", 2, SpaceTag::BTilde, None), Format::Latex);
        assert!(s.contains("x_{2,1},\\ldots ,x_{2,b_2}"), "{s}");
        assert!(s.contains("x_{12}"), "{s}");
        assert!(s.contains("\\deg x_{d,i} = \\deg x_{d} = d"), "{s}");
        let bg = render_report(&report("E8", 2, SpaceTag::BG, None), Format::Latex);
        assert!(bg.contains("\\deg y_{d} = d\n"), "{bg}");
        assert!(!bg.contains("y_{d,i}"), "{bg}");
        assert!(
            s.contains("\\pi_{12}(\\tilde{\\mathcal{B}})\\otimes\\mathbb{Q} = \\mathbb{Q}\n"),
            "{s}"
        );
        assert!(
            s.contains("\\pi_{2}(\\tilde{\\mathcal{B}})\\otimes\\mathbb{Q} = \\mathbb{Q}^{2}"),
            "{s}"
        );
    }

    #[test]
    fn trivial_algebra() {
        let r = report("SU(2)", 0, SpaceTag::BTilde, None);
        assert!(render_report(&r, Format::Text).contains("H* = Q (trivial)"));
        assert!(render_report(&r, Format::Latex).contains("= \\mathbb{Q}\n"));
    }

    #[test]
    fn text_table_for_su2_b_star() {
        let s = render_report(&report("SU(2)", 5, SpaceTag::BStar, None), Format::Text);
        assert!(s.contains("polynomial algebra, 6 generators"), "{s}");
        assert!(s.contains("       2       5\n"), "{s}");
        assert!(s.contains("       4       1\n"), "{s}");
        assert!(s.contains("1/((1-t^2)^5(1-t^4))"), "{s}");
    }

    #[test]
    fn alias_is_explicit() {
        let s = render_report(&report("E8", 1, SpaceTag::GaugeTilde, None), Format::Text);
        assert!(s.contains("rationally identical to `gauge`"), "{s}");
    }

    #[test]
    fn e8_b_tilde_json_has_fifteen_degrees() {
        let r = report("E8", 3, SpaceTag::BTilde, None);
        let v: serde_json::Value = serde_json::from_str(&render_report(&r, Format::Json)).unwrap();
        let gens = v["algebra"]["generators"].as_array().unwrap();
        assert_eq!(gens.len(), 15);
        assert_eq!(v["algebra"]["total"].as_u64(), Some(31));
        let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(
            keys,
            [
                "algebra",
                "b2",
                "caveats",
                "connectivity",
                "group",
                "homotopy_ranks",
                "poincare",
                "space"
            ]
        );
    }

    #[test]
    fn big_betti_numbers_stay_exact_in_json() {
        // 1/(1-t^2)^60 at t^80 is C(99, 59)
        let r = report("SU(2)", 60, SpaceTag::BTilde, Some(80));
        let json = render_report(&r, Format::Json);
        let last = r.poincare.as_ref().unwrap().last().unwrap().to_string();
        assert!(last.len() > 20);
        assert!(json.contains(&last));
        assert!(!json.contains('.') || !json.contains(&format!("{last}.")));
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn text_and_json_carry_the_same_numbers() {
        let r = report("SU(3)xG2", 4, SpaceTag::Gauge, Some(12));
        let text = render_report(&r, Format::Text);
        for (d, rank) in &r.homotopy_ranks {
            assert!(text.contains(&format!("  {d:>6}  {rank:>6}")));
        }
        for (d, c) in &r.algebra.generators {
            assert!(text.contains(&format!("  {d:>6}  {c:>6}")));
        }
        for (j, b) in r.poincare.as_ref().unwrap().iter().enumerate() {
            assert!(text.contains(&format!("  {j:>6}  {b}\n")));
        }
    }
}
