//! Rational homotopy ranks of the gauge groups and of the quotients of the
//! space of connections.
//!
//! Everything is driven by the rank table of `G` and by `b₂(M)`. Up to
//! homotopy `M` is a wedge of `b₂` two-spheres with one four-cell attached,
//! and the based gauge group `𝒢₀` is weakly equivalent to `Map_*(M, G)`. The
//! resulting long exact sequences split rationally, giving for `j >= 1`:
//!
//! ```text
//! rk π_j(𝒢₀) = b₂·rk π_{j+2}(G) + rk π_{j+4}(G)
//! rk π_j(𝒢)  = rk π_j(𝒢₀) + rk π_j(G)                 (= rk π_j(𝒢̃))
//! rk π_j(B̃)  = b₂·rk π_{j+1}(G) + rk π_{j+3}(G)       (= rk π_j(B̃*))
//! rk π_j(B*) = rk π_j(B̃) + rk π_{j-1}(G)
//! ```
//!
//! The degree-wise formulas are the source of truth. Totals are obtained by
//! summation only.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::liegroups::GroupSpec;

/// The spaces whose rational homotopy this crate describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpaceTag {
    /// The structure group `G`.
    #[serde(rename = "g")]
    G,
    /// Based gauge group `𝒢₀`.
    #[serde(rename = "g0")]
    G0,
    /// Full gauge group `𝒢`.
    #[serde(rename = "gauge")]
    Gauge,
    /// `𝒢̃ = 𝒢/Z(G)`, rationally the same as `𝒢`.
    #[serde(rename = "gauge-tilde")]
    GaugeTilde,
    /// `B̃ = 𝒜/𝒢₀`.
    #[serde(rename = "b-tilde")]
    BTilde,
    /// `B̃* = 𝒜*/𝒢₀`, weakly equivalent to `B̃`.
    #[serde(rename = "b-tilde-star")]
    BTildeStar,
    /// `B* = 𝒜*/𝒢̃`.
    #[serde(rename = "b-star")]
    BStar,
    /// Classifying space `B_G`.
    #[serde(rename = "bg")]
    BG,
}

impl SpaceTag {
    pub const ALL: [SpaceTag; 8] = [
        SpaceTag::G,
        SpaceTag::G0,
        SpaceTag::Gauge,
        SpaceTag::GaugeTilde,
        SpaceTag::BTilde,
        SpaceTag::BTildeStar,
        SpaceTag::BStar,
        SpaceTag::BG,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SpaceTag::G => "g",
            SpaceTag::G0 => "g0",
            SpaceTag::Gauge => "gauge",
            SpaceTag::GaugeTilde => "gauge-tilde",
            SpaceTag::BTilde => "b-tilde",
            SpaceTag::BTildeStar => "b-tilde-star",
            SpaceTag::BStar => "b-star",
            SpaceTag::BG => "bg",
        }
    }

    /// Groups carry odd-degree rational homotopy; the quotient spaces and
    /// `B_G` carry even-degree rational homotopy.
    pub fn is_odd(self) -> bool {
        matches!(
            self,
            SpaceTag::G | SpaceTag::G0 | SpaceTag::Gauge | SpaceTag::GaugeTilde
        )
    }

    /// The tag whose table this one shares (`gauge-tilde -> gauge`,
    /// `b-tilde-star -> b-tilde`), or `None` if it is not an alias.
    pub fn alias_of(self) -> Option<SpaceTag> {
        match self {
            SpaceTag::GaugeTilde => Some(SpaceTag::Gauge),
            SpaceTag::BTildeStar => Some(SpaceTag::BTilde),
            _ => None,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            SpaceTag::G => "structure group G",
            SpaceTag::G0 => "based gauge group G_0",
            SpaceTag::Gauge => "gauge group G (identity component)",
            SpaceTag::GaugeTilde => "reduced gauge group G/Z(G) (identity component)",
            SpaceTag::BTilde => "A/G_0, connections modulo based gauge",
            SpaceTag::BTildeStar => "A*/G_0, irreducible connections modulo based gauge",
            SpaceTag::BStar => "A*/(G/Z(G)), irreducible connections modulo gauge",
            SpaceTag::BG => "classifying space B_G",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            SpaceTag::G => "G",
            SpaceTag::G0 => "\\mathcal{G}_0^{e}",
            SpaceTag::Gauge => "\\mathcal{G}^{e}",
            SpaceTag::GaugeTilde => "\\tilde{\\mathcal{G}}^{e}",
            SpaceTag::BTilde => "\\tilde{\\mathcal{B}}",
            SpaceTag::BTildeStar => "\\tilde{\\mathcal{B}}^{*}",
            SpaceTag::BStar => "\\mathcal{B}^{*}",
            SpaceTag::BG => "B_G",
        }
    }
}

impl fmt::Display for SpaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown space `{0}` (expected one of g, g0, gauge, gauge-tilde, b-tilde, b-tilde-star, b-star, bg)")]
pub struct UnknownSpace(pub String);

impl FromStr for SpaceTag {
    type Err = UnknownSpace;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SpaceTag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownSpace(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RanksError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("degree {degree} has the wrong parity for space `{tag}`")]
    Parity { tag: SpaceTag, degree: u32 },
}

/// Finitely supported table `degree -> rk π_degree(X) ⊗ Q` for one space.
///
/// Zero ranks are never stored and every degree is at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedRanks {
    tag: SpaceTag,
    // dense by degree; index 0 unused, no trailing zeros
    ranks: Vec<u64>,
}

impl GradedRanks {
    pub fn empty(tag: SpaceTag) -> Self {
        GradedRanks {
            tag,
            ranks: Vec::new(),
        }
    }

    /// Checked constructor: rejects degree 0 and degrees of the wrong parity
    /// for `tag`. Zero ranks are dropped; repeated degrees accumulate.
    pub fn try_from_entries(
        tag: SpaceTag,
        entries: impl IntoIterator<Item = (u32, u64)>,
    ) -> Result<Self, RanksError> {
        let mut out = GradedRanks::empty(tag);
        for (degree, rank) in entries {
            if degree == 0 {
                return Err(RanksError::ZeroDegree);
            }
            if rank == 0 {
                continue;
            }
            if (degree % 2 == 1) != tag.is_odd() {
                return Err(RanksError::Parity { tag, degree });
            }
            out.add(degree, rank);
        }
        Ok(out)
    }

    /// Evaluates `rank_at` for every degree in `1..=max_degree`.
    fn from_fn(tag: SpaceTag, max_degree: u32, rank_at: impl Fn(u32) -> u64) -> Self {
        let mut ranks: Vec<u64> = (0..=max_degree)
            .map(|j| if j == 0 { 0 } else { rank_at(j) })
            .collect();
        while ranks.last() == Some(&0) {
            ranks.pop();
        }
        GradedRanks { tag, ranks }
    }

    pub(crate) fn add(&mut self, degree: u32, rank: u64) {
        debug_assert!(degree >= 1);
        if rank > 0 {
            let d = degree as usize;
            if self.ranks.len() <= d {
                self.ranks.resize(d + 1, 0);
            }
            self.ranks[d] += rank;
        }
    }

    pub fn tag(&self) -> SpaceTag {
        self.tag
    }

    /// Rank at `degree`; zero outside the support (including degree 0).
    pub fn rank(&self, degree: u32) -> u64 {
        self.ranks.get(degree as usize).copied().unwrap_or(0)
    }

    /// `(degree, rank)` pairs in increasing degree.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r > 0)
            .map(|(d, &r)| (d as u32, r))
    }

    pub fn total(&self) -> u64 {
        self.ranks.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn max_degree(&self) -> Option<u32> {
        if self.ranks.is_empty() {
            None
        } else {
            Some(self.ranks.len() as u32 - 1)
        }
    }

    /// Entries with degree at most `max_degree`.
    pub fn truncated(&self, max_degree: u32) -> GradedRanks {
        let mut ranks: Vec<u64> = self
            .ranks
            .iter()
            .take(max_degree as usize + 1)
            .copied()
            .collect();
        while ranks.last() == Some(&0) {
            ranks.pop();
        }
        GradedRanks {
            tag: self.tag,
            ranks,
        }
    }

    pub(crate) fn retagged(mut self, tag: SpaceTag) -> Self {
        self.tag = tag;
        self
    }
}

/// The second Betti number of the simply connected four-manifold `M`, the
/// only datum of `M` the formulas consume. `b2 = 0` means `M ≃ S⁴`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct BaseData {
    pub b2: u32,
}

impl BaseData {
    pub fn new(b2: u32) -> Self {
        BaseData { b2 }
    }
}

/// Whether the gauge groups are connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Connectivity {
    /// `π₄(G) = 0`, so `𝒢₀` and `𝒢` are connected.
    Connected,
    /// `π₀` is finite but its order is not determined here.
    FiniteUnknown,
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connectivity::Connected => "connected",
            Connectivity::FiniteUnknown => "finite-unknown",
        })
    }
}

pub fn connectivity_report(g: &GroupSpec) -> Connectivity {
    if g.pi4_is_trivial() {
        Connectivity::Connected
    } else {
        Connectivity::FiniteUnknown
    }
}

fn weighted(b2: u32, rank: u64) -> u64 {
    u64::from(b2) * rank
}

// Upper end of the degree scan: the group table ends at 2·max(exponent) - 1,
// and every derived table ends at most one degree above it.
fn scan_limit(pg: &GradedRanks) -> u32 {
    pg.max_degree().map_or(0, |d| d + 1)
}

pub fn ranks_g(g: &GroupSpec) -> GradedRanks {
    g.rational_homotopy()
}

/// `rk π_j(𝒢₀) = b₂·rk π_{j+2}(G) + rk π_{j+4}(G)`.
pub fn ranks_g0(g: &GroupSpec, base: BaseData) -> GradedRanks {
    g0_from(&g.rational_homotopy(), base)
}

/// `rk π_j(𝒢) = b₂·rk π_{j+2}(G) + rk π_{j+4}(G) + rk π_j(G)`.
pub fn ranks_gauge(g: &GroupSpec, base: BaseData) -> GradedRanks {
    gauge_from(&g.rational_homotopy(), base)
}

/// Same table as [`ranks_gauge`]: the center is finite, so `𝒢 → 𝒢̃` is a
/// rational equivalence on every homotopy group.
pub fn ranks_gauge_tilde(g: &GroupSpec, base: BaseData) -> GradedRanks {
    ranks_gauge(g, base).retagged(SpaceTag::GaugeTilde)
}

/// `rk π_j(B̃) = b₂·rk π_{j+1}(G) + rk π_{j+3}(G)`.
pub fn ranks_b_tilde(g: &GroupSpec, base: BaseData) -> GradedRanks {
    b_tilde_from(&g.rational_homotopy(), base)
}

/// Same table as [`ranks_b_tilde`] (`B̃*` is weakly equivalent to `B̃`).
pub fn ranks_b_tilde_star(g: &GroupSpec, base: BaseData) -> GradedRanks {
    ranks_b_tilde(g, base).retagged(SpaceTag::BTildeStar)
}

/// `rk π_j(B*) = b₂·rk π_{j+1}(G) + rk π_{j+3}(G) + rk π_{j-1}(G)`.
pub fn ranks_b_star(g: &GroupSpec, base: BaseData) -> GradedRanks {
    b_star_from(&g.rational_homotopy(), base)
}

/// `rk π_j(B_G) = rk π_{j-1}(G)`.
pub fn ranks_bg(g: &GroupSpec) -> GradedRanks {
    bg_from(&g.rational_homotopy())
}

// The same formulas, taking the rank table of G directly.

pub(crate) fn g0_from(pg: &GradedRanks, base: BaseData) -> GradedRanks {
    GradedRanks::from_fn(SpaceTag::G0, scan_limit(pg), |j| {
        weighted(base.b2, pg.rank(j + 2)) + pg.rank(j + 4)
    })
}

pub(crate) fn gauge_from(pg: &GradedRanks, base: BaseData) -> GradedRanks {
    GradedRanks::from_fn(SpaceTag::Gauge, scan_limit(pg), |j| {
        weighted(base.b2, pg.rank(j + 2)) + pg.rank(j + 4) + pg.rank(j)
    })
}

pub(crate) fn b_tilde_from(pg: &GradedRanks, base: BaseData) -> GradedRanks {
    GradedRanks::from_fn(SpaceTag::BTilde, scan_limit(pg), |j| {
        weighted(base.b2, pg.rank(j + 1)) + pg.rank(j + 3)
    })
}

pub(crate) fn b_star_from(pg: &GradedRanks, base: BaseData) -> GradedRanks {
    GradedRanks::from_fn(SpaceTag::BStar, scan_limit(pg), |j| {
        weighted(base.b2, pg.rank(j + 1)) + pg.rank(j + 3) + pg.rank(j - 1)
    })
}

pub(crate) fn bg_from(pg: &GradedRanks) -> GradedRanks {
    GradedRanks::from_fn(SpaceTag::BG, scan_limit(pg), |j| pg.rank(j - 1))
}

/// Dispatches on `space`.
pub fn ranks_for(space: SpaceTag, g: &GroupSpec, base: BaseData) -> GradedRanks {
    match space {
        SpaceTag::G => ranks_g(g),
        SpaceTag::G0 => ranks_g0(g, base),
        SpaceTag::Gauge => ranks_gauge(g, base),
        SpaceTag::GaugeTilde => ranks_gauge_tilde(g, base),
        SpaceTag::BTilde => ranks_b_tilde(g, base),
        SpaceTag::BTildeStar => ranks_b_tilde_star(g, base),
        SpaceTag::BStar => ranks_b_star(g, base),
        SpaceTag::BG => ranks_bg(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liegroups::parse_group_spec;

    fn g(s: &str) -> GroupSpec {
        parse_group_spec(s).unwrap()
    }

    fn table(r: &GradedRanks) -> Vec<(u32, u64)> {
        r.entries().collect()
    }

    #[test]
    fn su2_tables() {
        for b2 in [0u32, 1, 2, 5, 22] {
            let base = BaseData::new(b2);
            let b = u64::from(b2);
            let nz = |v: Vec<(u32, u64)>| v.into_iter().filter(|&(_, r)| r > 0).collect::<Vec<_>>();
            assert_eq!(table(&ranks_g0(&g("SU(2)"), base)), nz(vec![(1, b)]));
            assert_eq!(
                table(&ranks_gauge(&g("SU(2)"), base)),
                nz(vec![(1, b), (3, 1)])
            );
            assert_eq!(table(&ranks_b_tilde(&g("SU(2)"), base)), nz(vec![(2, b)]));
            assert_eq!(
                table(&ranks_b_star(&g("SU(2)"), base)),
                nz(vec![(2, b), (4, 1)])
            );
        }
        assert!(ranks_g0(&g("SU(2)"), BaseData::new(0)).is_empty());
    }

    #[test]
    fn su3_gauge_by_hand() {
        // j=1: 2·1 + 1; j=3: 2·1 + 0 + 1; j=5: 0 + 0 + 1
        let r = ranks_gauge(&g("SU(3)"), BaseData::new(2));
        assert_eq!(table(&r), [(1, 3), (3, 3), (5, 1)]);
    }

    #[test]
    fn e8_b_tilde_without_b2() {
        let r = ranks_b_tilde(&g("E8"), BaseData::new(0));
        assert_eq!(
            table(&r),
            [12, 20, 24, 32, 36, 44, 56].map(|j| (j, 1)).to_vec()
        );
    }

    #[test]
    fn aliases_share_tables() {
        let grp = g("SU(3)xG2");
        let base = BaseData::new(3);
        assert_eq!(
            table(&ranks_gauge_tilde(&grp, base)),
            table(&ranks_gauge(&grp, base))
        );
        assert_eq!(
            table(&ranks_b_tilde_star(&grp, base)),
            table(&ranks_b_tilde(&grp, base))
        );
        assert_eq!(ranks_gauge_tilde(&grp, base).tag(), SpaceTag::GaugeTilde);
    }

    #[test]
    fn bg_is_shifted_group_table() {
        let r = ranks_bg(&g("E8"));
        assert_eq!(
            table(&r),
            [4, 16, 24, 28, 36, 40, 48, 60].map(|j| (j, 1)).to_vec()
        );
    }

    #[test]
    fn connectivity() {
        assert_eq!(connectivity_report(&g("E8")), Connectivity::Connected);
        assert_eq!(
            connectivity_report(&g("SU(2)")),
            Connectivity::FiniteUnknown
        );
        assert_eq!(
            connectivity_report(&g("SU(3)xSp(2)")),
            Connectivity::FiniteUnknown
        );
        assert_eq!(
            connectivity_report(&g("SU(4)xSpin(7)")),
            Connectivity::Connected
        );
    }

    #[test]
    fn checked_constructor() {
        assert_eq!(
            GradedRanks::try_from_entries(SpaceTag::BStar, [(3, 1)]),
            Err(RanksError::Parity {
                tag: SpaceTag::BStar,
                degree: 3
            })
        );
        assert_eq!(
            GradedRanks::try_from_entries(SpaceTag::Gauge, [(0, 1)]),
            Err(RanksError::ZeroDegree)
        );
        let r = GradedRanks::try_from_entries(SpaceTag::Gauge, [(3, 1), (5, 0), (3, 2)]).unwrap();
        assert_eq!(table(&r), [(3, 3)]);
        // zero ranks are dropped before the parity test
        assert!(GradedRanks::try_from_entries(SpaceTag::BTilde, [(3, 0)])
            .unwrap()
            .is_empty());
    }

    #[test]
    fn space_tag_strings() {
        for t in SpaceTag::ALL {
            assert_eq!(t.as_str().parse::<SpaceTag>().unwrap(), t);
            let json = serde_json::to_string(&t).unwrap();
            assert_eq!(json, format!("\"{}\"", t.as_str()));
        }
        assert!("b-tilda".parse::<SpaceTag>().is_err());
    }
}
