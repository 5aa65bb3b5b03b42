use num_bigint::BigUint;
use proptest::prelude::*;
use rational_gauge::cli::{build_report, render_report, Format, Report};
use rational_gauge::cohomology::{
    cohomology_b_star, cohomology_bg, cohomology_for, cohomology_gauge_identity,
};
use rational_gauge::homotopy::ranks_for;
use rational_gauge::liegroups::simple_factors_up_to_rank;
use rational_gauge::series::{expand, poincare_series};
use rational_gauge::{parse_group_spec, BaseData, GroupSpec, SimpleFactor, SpaceTag};

fn arb_group() -> impl Strategy<Value = GroupSpec> {
    let simple = simple_factors_up_to_rank(10);
    prop::collection::vec(prop::sample::select(simple), 1..=4)
        .prop_map(|f: Vec<SimpleFactor>| GroupSpec::new(f).unwrap())
}

fn arb_space() -> impl Strategy<Value = SpaceTag> {
    prop::sample::select(SpaceTag::ALL.to_vec())
}

// rk π_j(G) straight from the exponents
fn pi(g: &GroupSpec, j: i64) -> u64 {
    g.exponents()
        .iter()
        .filter(|&&k| 2 * i64::from(k) - 1 == j)
        .count() as u64
}

proptest! {
    #[test]
    fn tables_follow_the_degree_formulas(g in arb_group(), b2 in 0u32..40) {
        let base = BaseData::new(b2);
        let b = u64::from(b2);
        for space in SpaceTag::ALL {
            let t = ranks_for(space, &g, base);
            for j in 1..=(2 * g.max_exponent() as i64 + 4) {
                let want = match space {
                    SpaceTag::G => pi(&g, j),
                    SpaceTag::G0 => b * pi(&g, j + 2) + pi(&g, j + 4),
                    SpaceTag::Gauge | SpaceTag::GaugeTilde => b * pi(&g, j + 2) + pi(&g, j + 4) + pi(&g, j),
                    SpaceTag::BTilde | SpaceTag::BTildeStar => b * pi(&g, j + 1) + pi(&g, j + 3),
                    SpaceTag::BStar => b * pi(&g, j + 1) + pi(&g, j + 3) + pi(&g, j - 1),
                    SpaceTag::BG => pi(&g, j - 1),
                };
                prop_assert_eq!(t.rank(j as u32), want, "{} {} j={}", g, space, j);
            }
            for (d, _) in t.entries() {
                prop_assert_eq!(d % 2 == 1, space.is_odd());
            }
        }
    }

    #[test]
    fn generator_totals(g in arb_group(), b2 in 0u32..40) {
        let base = BaseData::new(b2);
        let (rk, s, b) = (g.rank(), g.simple_factor_count() as u64, u64::from(b2));
        prop_assert_eq!(cohomology_gauge_identity(&g, base).generator_count(), (b + 2) * rk - s);
        prop_assert_eq!(cohomology_b_star(&g, base).generator_count(), (b + 2) * rk - s);
        prop_assert_eq!(cohomology_for(SpaceTag::BTilde, &g, base).generator_count(), (b + 1) * rk - s);
        prop_assert_eq!(cohomology_for(SpaceTag::G0, &g, base).generator_count(), (b + 1) * rk - s);
        prop_assert_eq!(cohomology_bg(&g).generator_count(), rk);
    }

    #[test]
    fn canonical_name_round_trips(g in arb_group()) {
        let again = parse_group_spec(&g.to_string()).unwrap();
        prop_assert_eq!(&again, &g);
        prop_assert_eq!(again.to_string(), g.to_string());
    }

    #[test]
    fn report_json_round_trips(
        g in arb_group(),
        b2 in 0u32..30,
        space in arb_space(),
        series in prop::option::of(0usize..40),
    ) {
        let r = build_report(&g, BaseData::new(b2), space, series, None);
        let json = render_report(&r, Format::Json);
        let back: Report = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn exterior_series_sums_to_power_of_two(g in arb_group(), b2 in 0u32..6) {
        let a = cohomology_gauge_identity(&g, BaseData::new(b2));
        let top: u64 = a.generators().map(|(d, c)| u64::from(d) * c).sum();
        let betti = expand(&poincare_series(&a), top as usize);
        let sum: BigUint = betti.iter().sum();
        prop_assert_eq!(sum, BigUint::from(2u8).pow(a.generator_count() as u32));
        // Poincaré duality of the exterior algebra
        let reversed: Vec<_> = betti.iter().rev().cloned().collect();
        prop_assert_eq!(reversed, betti);
    }
}
