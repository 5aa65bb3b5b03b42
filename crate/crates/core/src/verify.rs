//! Consistency checks tying the rank tables together.
//!
//! Every table in [`crate::homotopy`] is computed directly from its own
//! degree formula. The fibrations `𝒢₀ → 𝒢 → G`, `𝒢₀ → 𝒜 → B̃` and
//! `𝒢̃ → 𝒜* → B*` relate them, and the checks below confirm those relations
//! degree by degree, together with the classification data of `G` and the
//! generator totals.

use std::fmt;

use crate::cohomology::{self, FreeGradedAlgebra};
use crate::homotopy::{self, BaseData, GradedRanks, SpaceTag};
use crate::liegroups::{simple_factors_up_to_rank, FactorData, GroupSpec, SimpleFactor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

/// Named check results; a failing check's detail names the offending degree
/// or value.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    fn record(&mut self, name: impl Into<String>, result: Result<String, String>) {
        let (status, detail) = match result {
            Ok(detail) => (CheckStatus::Pass, detail),
            Err(detail) => (CheckStatus::Fail, detail),
        };
        self.checks.push(Check {
            name: name.into(),
            status,
            detail,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
            };
            writeln!(f, "{tag}  {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Exponent multiset against rank and dimension for each factor:
/// `#exponents = rank`, `Σ(2k-1) = dim`, `min exponent = 2`.
pub fn check_factor_data(factors: &[FactorData]) -> CheckReport {
    let mut report = CheckReport::default();
    for f in factors {
        let label = &f.label;
        report.record(format!("{label}: exponent count = rank"), {
            let n = f.exponents.len() as u64;
            if n == u64::from(f.rank) {
                Ok(format!("{n} exponents"))
            } else {
                Err(format!("{n} exponents but rank {}", f.rank))
            }
        });
        report.record(format!("{label}: Σ(2k-1) = dimension"), {
            let sum: u64 = f.exponents.iter().map(|&k| 2 * u64::from(k) - 1).sum();
            if sum == f.dimension {
                Ok(format!("{sum}"))
            } else {
                Err(format!("Σ(2k-1) = {sum} but dimension {}", f.dimension))
            }
        });
        report.record(format!("{label}: minimum exponent = 2"), {
            match f.exponents.iter().min() {
                Some(2) => Ok("2".into()),
                other => Err(format!("minimum exponent {other:?}")),
            }
        });
    }
    report
}

/// [`check_factor_data`] on each factor, plus the group-level identities
/// `Σ_j rk π_j(G) = rk G` and `ν(2) = number of simple factors`.
pub fn check_group_data(g: &GroupSpec) -> CheckReport {
    let data: Vec<FactorData> = g.factors().iter().map(SimpleFactor::data).collect();
    let mut report = check_factor_data(&data);
    let pg = g.rational_homotopy();
    report.record("Σ_j rk π_j(G) = rk G", {
        if pg.total() == g.rank() {
            Ok(format!("{}", g.rank()))
        } else {
            Err(format!("Σ = {} but rank {}", pg.total(), g.rank()))
        }
    });
    report.record("rk π_3(G) = number of simple factors", {
        let s = g.simple_factor_count() as u64;
        if pg.rank(3) == s {
            Ok(format!("{s}"))
        } else {
            Err(format!("rk π_3 = {} but {s} factors", pg.rank(3)))
        }
    });
    report
}

fn first_mismatch(
    max_degree: u32,
    lhs: impl Fn(u32) -> u64,
    rhs: impl Fn(u32) -> u64,
) -> Result<String, String> {
    for j in 1..=max_degree {
        let (l, r) = (lhs(j), rhs(j));
        if l != r {
            return Err(format!("degree {j}: {l} != {r}"));
        }
    }
    Ok(format!("degrees 1..={max_degree}"))
}

fn parity_ok(r: &GradedRanks, max_degree: u32) -> Result<String, String> {
    let odd = r.tag().is_odd();
    match r
        .entries()
        .take_while(|&(d, _)| d <= max_degree)
        .find(|&(d, _)| (d % 2 == 1) != odd)
    {
        None => Ok(format!("{} degrees only", if odd { "odd" } else { "even" })),
        Some((d, rank)) => Err(format!("rank {rank} in degree {d}")),
    }
}

/// Degree-wise relations between the tables for `j ≤ max_degree`:
///
/// * `rk π_j(𝒢) = rk π_j(𝒢₀) + rk π_j(G)`
/// * `rk π_j(B̃) = rk π_{j-1}(𝒢₀)` and `rk π_j(B*) = rk π_{j-1}(𝒢̃)`
/// * `H*(B*)` has the generators of `H*(B̃) ⊗ H*(B_G)`
/// * each table has the parity of its space.
pub fn check_sequence_consistency(g: &GroupSpec, base: BaseData, max_degree: u32) -> CheckReport {
    let mut report = CheckReport::default();
    if max_degree == 0 {
        report.record("max degree", Err("max_degree must be at least 1".into()));
        return report;
    }
    let pg = g.rational_homotopy();
    let g0 = homotopy::g0_from(&pg, base);
    let gauge = homotopy::gauge_from(&pg, base);
    let gauge_tilde = gauge.clone().retagged(SpaceTag::GaugeTilde);
    let b_tilde = homotopy::b_tilde_from(&pg, base);
    let b_tilde_star = b_tilde.clone().retagged(SpaceTag::BTildeStar);
    let b_star = homotopy::b_star_from(&pg, base);
    let bg = homotopy::bg_from(&pg);

    report.record(
        "rk π_j(𝒢) = rk π_j(𝒢₀) + rk π_j(G)",
        first_mismatch(max_degree, |j| gauge.rank(j), |j| g0.rank(j) + pg.rank(j)),
    );
    report.record(
        "rk π_j(𝒢̃) = rk π_j(𝒢)",
        first_mismatch(max_degree, |j| gauge_tilde.rank(j), |j| gauge.rank(j)),
    );
    report.record(
        "rk π_j(B̃) = rk π_{j-1}(𝒢₀)",
        first_mismatch(max_degree, |j| b_tilde.rank(j), |j| g0.rank(j - 1)),
    );
    report.record(
        "rk π_j(B̃*) = rk π_j(B̃)",
        first_mismatch(max_degree, |j| b_tilde_star.rank(j), |j| b_tilde.rank(j)),
    );
    report.record(
        "rk π_j(B*) = rk π_{j-1}(𝒢̃)",
        first_mismatch(max_degree, |j| b_star.rank(j), |j| gauge_tilde.rank(j - 1)),
    );
    report.record(
        "rk π_j(B_G) = rk π_{j-1}(G)",
        first_mismatch(max_degree, |j| bg.rank(j), |j| pg.rank(j - 1)),
    );

    let h_b_star = FreeGradedAlgebra::from_ranks(&b_star);
    let h_tensor = FreeGradedAlgebra::from_ranks(&b_tilde).tensor(&cohomology::cohomology_bg(g));
    report.record("gens H*(B*) = gens H*(B̃) ⊎ gens H*(B_G)", {
        let upto = |a: &FreeGradedAlgebra| {
            a.generators()
                .take_while(|&(d, _)| d <= max_degree)
                .collect::<Vec<_>>()
        };
        if upto(&h_b_star) == upto(&h_tensor) {
            Ok(format!("degrees 1..={max_degree}"))
        } else {
            first_mismatch(max_degree, |j| h_b_star.count(j), |j| h_tensor.count(j))
        }
    });

    for (name, table) in [
        ("G", &pg),
        ("𝒢₀", &g0),
        ("𝒢", &gauge),
        ("𝒢̃", &gauge_tilde),
        ("B̃", &b_tilde),
        ("B̃*", &b_tilde_star),
        ("B*", &b_star),
        ("B_G", &bg),
    ] {
        report.record(
            format!("parity of π_*({name})"),
            parity_ok(table, max_degree),
        );
    }
    report
}

fn expect_total(name: &str, got: u64, want: i128, form: &str) -> (String, Result<String, String>) {
    let result = if i128::from(got) == want {
        Ok(format!("{got} = {form}"))
    } else {
        Err(format!("{got} != {form} = {want}"))
    };
    (name.to_string(), result)
}

/// Generator totals against the closed forms. With `s` simple factors the
/// degree-wise formulas sum to `(b₂+1)·rk G - s` for `𝒢₀` and `B̃`, and to
/// `(b₂+2)·rk G - s` for `𝒢` and `B*`. For a simple group (`s = 1`) the
/// classical `… - 1` forms are checked as well.
pub fn check_totals(g: &GroupSpec, base: BaseData) -> CheckReport {
    let mut report = CheckReport::default();
    let rk = i128::from(g.rank());
    let b2 = i128::from(base.b2);
    let s = g.simple_factor_count() as i128;
    let tag = if s == 1 { "" } else { " [generalized -s form]" };

    let pg = g.rational_homotopy();
    let g0 = homotopy::g0_from(&pg, base).total();
    let gauge = FreeGradedAlgebra::from_ranks(&homotopy::gauge_from(&pg, base)).generator_count();
    let b_tilde =
        FreeGradedAlgebra::from_ranks(&homotopy::b_tilde_from(&pg, base)).generator_count();
    let b_star = FreeGradedAlgebra::from_ranks(&homotopy::b_star_from(&pg, base)).generator_count();
    let bg = cohomology::cohomology_bg(g).generator_count();

    let form_small = format!("(b2+1)·rk G - s = ({b2}+1)·{rk} - {s}");
    let form_big = format!("(b2+2)·rk G - s = ({b2}+2)·{rk} - {s}");
    let small = (b2 + 1) * rk - s;
    let big = (b2 + 2) * rk - s;

    for (name, got, want, form) in [
        ("Σ rk π_*(𝒢₀)", g0, small, &form_small),
        ("generators of H*(𝒢ᵉ)", gauge, big, &form_big),
        ("generators of H*(B̃)", b_tilde, small, &form_small),
        ("generators of H*(B*)", b_star, big, &form_big),
    ] {
        let (name, result) = expect_total(name, got, want, form);
        report.record(format!("{name}{tag}"), result);
    }
    let (name, result) = expect_total("generators of H*(B_G)", bg, rk, "rk G");
    report.record(name, result);

    if s == 1 {
        for (name, got, want, form) in [
            (
                "generators of H*(𝒢ᵉ), simple G",
                gauge,
                (b2 + 2) * rk - 1,
                "(b2+2)·rk G - 1",
            ),
            (
                "generators of H*(B̃), simple G",
                b_tilde,
                (b2 + 1) * rk - 1,
                "(b2+1)·rk G - 1",
            ),
            (
                "generators of H*(B*), simple G",
                b_star,
                (b2 + 2) * rk - 1,
                "(b2+2)·rk G - 1",
            ),
        ] {
            let (name, result) = expect_total(name, got, want, form);
            report.record(name, result);
        }
    }
    report
}

/// Every check for one `(g, b₂)` pair, scanning degrees up to `max_degree`.
pub fn check_all(g: &GroupSpec, base: BaseData, max_degree: u32) -> CheckReport {
    let mut report = check_group_data(g);
    report.extend(check_sequence_consistency(g, base, max_degree));
    report.extend(check_totals(g, base));
    report
}

/// Default degree bound for the checks: covers the full support of every
/// table, with a margin.
pub fn default_max_degree(g: &GroupSpec) -> u32 {
    2 * g.max_exponent() + 2
}

/// Second Betti numbers used by the self test.
pub const SELFTEST_B2: [u32; 5] = [0, 1, 2, 3, 22];

/// Simple groups of rank at most 8, and all products of two or three of
/// them (unordered, repeats allowed).
pub fn group_zoo() -> Vec<GroupSpec> {
    let simple = simple_factors_up_to_rank(8);
    let n = simple.len();
    let mut zoo: Vec<GroupSpec> = simple.iter().cloned().map(GroupSpec::simple).collect();
    for i in 0..n {
        for j in i..n {
            zoo.push(GroupSpec::new(vec![simple[i].clone(), simple[j].clone()]).expect("nonempty"));
        }
    }
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let triple = vec![simple[i].clone(), simple[j].clone(), simple[k].clone()];
                zoo.push(GroupSpec::new(triple).expect("nonempty"));
            }
        }
    }
    zoo
}

/// Summary of a self-test run.
#[derive(Debug, Clone, Default)]
pub struct SelftestSummary {
    pub groups: usize,
    pub cases: usize,
    pub checks: usize,
    /// `(group, b2, failing check)` for every failure.
    pub failures: Vec<(String, u32, Check)>,
}

impl SelftestSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs [`check_all`] for each group and each `b₂` value.
pub fn run_selftest(groups: &[GroupSpec], b2_values: &[u32]) -> SelftestSummary {
    let mut summary = SelftestSummary {
        groups: groups.len(),
        ..Default::default()
    };
    for g in groups {
        let max_degree = default_max_degree(g);
        // the group data does not depend on b2
        let group_data = check_group_data(g);
        for &b2 in b2_values {
            let base = BaseData::new(b2);
            let mut report = group_data.clone();
            report.extend(check_sequence_consistency(g, base, max_degree));
            report.extend(check_totals(g, base));
            summary.cases += 1;
            summary.checks += report.len();
            for c in report.failures() {
                summary.failures.push((g.to_string(), b2, c.clone()));
            }
        }
    }
    summary
}

/// Checks that every table vanishes outside its expected support: above
/// `2·max(exponent) - 1` for the groups and above `2·max(exponent)` for the
/// other spaces.
pub fn check_support(g: &GroupSpec, base: BaseData) -> CheckReport {
    let mut report = CheckReport::default();
    let top = 2 * g.max_exponent();
    for space in SpaceTag::ALL {
        let table = homotopy::ranks_for(space, g, base);
        let bound = if space.is_odd() { top - 1 } else { top };
        report.record(format!("support of π_*({space})"), {
            match table.max_degree() {
                Some(d) if d > bound => Err(format!("rank in degree {d} > {bound}")),
                _ => Ok(format!("within 1..={bound}")),
            }
        });
    }
    report
}
