use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::cohomology::{self, AlgebraKind};
use crate::homotopy::{self, BaseData, Connectivity, SpaceTag};
use crate::liegroups::GroupSpec;
use crate::series;

/// Everything computed for one `(group, b₂, space)` triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub group: GroupReport,
    pub b2: u32,
    pub space: SpaceTag,
    /// `(degree, rk π_degree ⊗ Q)`, nonzero entries in increasing degree.
    pub homotopy_ranks: Vec<(u32, u64)>,
    pub algebra: AlgebraReport,
    pub connectivity: Connectivity,
    /// Betti numbers `b_0 ..= b_N` when a series expansion was requested.
    #[serde(with = "big_numbers::option_list")]
    pub poincare: Option<Vec<BigUint>>,
    pub caveats: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupReport {
    /// Canonical product expression; parses back to the same group.
    pub canonical: String,
    pub rank: u64,
    pub dimension: u64,
    #[serde(with = "big_numbers::single")]
    pub center_order: BigUint,
    pub simple_factors: u64,
    pub factors: Vec<FactorReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorReport {
    /// As written on the command line.
    pub name: String,
    pub canonical: String,
    pub cartan: String,
    pub rank: u32,
    pub dimension: u64,
    pub exponents: Vec<u32>,
    pub center_order: u64,
    pub pi4_trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraReport {
    pub kind: AlgebraKind,
    /// `(degree, number of generators)` in increasing degree.
    pub generators: Vec<(u32, u64)>,
    pub total: u64,
}

impl GroupReport {
    pub fn new(g: &GroupSpec) -> Self {
        GroupReport {
            canonical: g.to_string(),
            rank: g.rank(),
            dimension: g.dimension(),
            center_order: g.center_order(),
            simple_factors: g.simple_factor_count() as u64,
            factors: g
                .factors()
                .iter()
                .map(|f| FactorReport {
                    name: f.display_name().to_string(),
                    canonical: f.canonical_name(),
                    cartan: f.cartan_label(),
                    rank: f.rank(),
                    dimension: f.dimension(),
                    exponents: f.exponents(),
                    center_order: f.center_order(),
                    pi4_trivial: f.pi4_is_trivial(),
                })
                .collect(),
        }
    }
}

fn caveats(g: &GroupSpec, space: SpaceTag) -> Vec<String> {
    let mut out = Vec::new();
    let s = g.simple_factor_count();
    if s > 1 {
        out.push(format!(
            "G has {s} simple factors: generator totals are (b2+2)·rk G - {s} for the gauge \
             group and B*, (b2+1)·rk G - {s} for G_0 and B~; the closed forms ending in -1 \
             hold for simple G only"
        ));
    }
    if !g.pi4_is_trivial() {
        let text = match space {
            SpaceTag::G0 | SpaceTag::Gauge | SpaceTag::GaugeTilde => {
                "π4(G) ≠ 0: π0 of the gauge group is finite but its order is not determined; \
                 H*(gauge group) is the sum of |π0| copies of the identity-component algebra shown"
            }
            SpaceTag::BTilde | SpaceTag::BTildeStar | SpaceTag::BStar => {
                "π4(G) ≠ 0: the space need not be simply connected (π1 is finite); \
                 the minimal model still applies since the space is nilpotent"
            }
            SpaceTag::G | SpaceTag::BG => {
                "π4(G) ≠ 0: the associated gauge groups have finite but undetermined π0"
            }
        };
        out.push(text.to_string());
    }
    out
}

/// Builds the report. `max_degree` limits the listed homotopy ranks;
/// `series` requests Betti numbers up to that degree.
pub fn build_report(
    g: &GroupSpec,
    base: BaseData,
    space: SpaceTag,
    series_degree: Option<usize>,
    max_degree: Option<u32>,
) -> Report {
    let ranks = homotopy::ranks_for(space, g, base);
    let ranks = match max_degree {
        Some(n) => ranks.truncated(n),
        None => ranks,
    };
    let algebra = cohomology::cohomology_for(space, g, base);
    let poincare = series_degree.map(|n| series::poincare_series(&algebra).expand(n));
    Report {
        group: GroupReport::new(g),
        b2: base.b2,
        space,
        homotopy_ranks: ranks.entries().collect(),
        algebra: AlgebraReport {
            kind: algebra.kind(),
            generators: algebra.generators().collect(),
            total: algebra.generator_count(),
        },
        connectivity: homotopy::connectivity_report(g),
        poincare,
        caveats: caveats(g, space),
    }
}

/// Arbitrary-size unsigned integers written as plain JSON numbers.
mod big_numbers {
    use std::str::FromStr;

    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Number;

    fn to_number<E: serde::ser::Error>(n: &BigUint) -> Result<Number, E> {
        Number::from_str(&n.to_string()).map_err(E::custom)
    }

    fn from_number<E: serde::de::Error>(n: &Number) -> Result<BigUint, E> {
        BigUint::from_str(&n.to_string())
            .map_err(|_| E::custom(format!("expected a nonnegative integer, found {n}")))
    }

    pub mod single {
        use super::*;

        pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
            to_number::<S::Error>(n)?.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
            from_number(&Number::deserialize(d)?)
        }
    }

    pub mod option_list {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<Vec<BigUint>>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                None => s.serialize_none(),
                Some(list) => {
                    let numbers = list
                        .iter()
                        .map(to_number::<S::Error>)
                        .collect::<Result<Vec<Number>, _>>()?;
                    s.serialize_some(&numbers)
                }
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Option<Vec<BigUint>>, D::Error> {
            match Option::<Vec<Number>>::deserialize(d)? {
                None => Ok(None),
                Some(list) => list
                    .iter()
                    .map(from_number::<D::Error>)
                    .collect::<Result<Vec<_>, _>>()
                    .map(Some),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liegroups::parse_group_spec;

    #[test]
    fn caveats_iff_products_or_nontrivial_pi4() {
        for (s, expected) in [
            ("E8", 0),
            ("SU(3)", 0),
            ("SU(2)", 1),
            ("Sp(3)", 1),
            ("E8xE8", 1),
            ("SU(2)xE8", 2),
        ] {
            let g = parse_group_spec(s).unwrap();
            for space in SpaceTag::ALL {
                let r = build_report(&g, BaseData::new(2), space, None, None);
                assert_eq!(r.caveats.len(), expected, "{s} {space}");
            }
        }
    }

    #[test]
    fn totals_match_sums() {
        let g = parse_group_spec("E8").unwrap();
        let r = build_report(&g, BaseData::new(3), SpaceTag::Gauge, Some(30), None);
        assert_eq!(
            r.algebra.total,
            r.algebra.generators.iter().map(|&(_, c)| c).sum::<u64>()
        );
        assert_eq!(r.algebra.total, 39);
        assert_eq!(r.poincare.as_ref().map(Vec::len), Some(31));
        assert!(r.homotopy_ranks.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn max_degree_truncates_listing() {
        let g = parse_group_spec("E8").unwrap();
        let r = build_report(&g, BaseData::new(1), SpaceTag::BStar, None, Some(20));
        assert_eq!(r.homotopy_ranks.last().map(|e| e.0), Some(20));
        assert_eq!(r.algebra.total, 23);
    }
}
