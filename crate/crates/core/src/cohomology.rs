//! Rational cohomology algebras as free graded-commutative algebras.
//!
//! All the spaces handled here are nilpotent, of finite type, and have
//! rational homotopy concentrated in a single parity. Their minimal models
//! therefore have one generator of degree `j` per unit of `rk π_j`, and the
//! differential vanishes for parity reasons. The cohomology is the free
//! algebra on those generators: exterior for the gauge groups, polynomial for
//! `B̃`, `B̃*`, `B*` and `B_G`. In particular every space is formal and all
//! Massey products vanish.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::homotopy::{self, BaseData, Connectivity, GradedRanks, SpaceTag};
use crate::liegroups::GroupSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    /// All generators odd.
    Exterior,
    /// All generators even.
    Polynomial,
    /// Generators of both parities.
    MixedFree,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::Exterior => "exterior",
            AlgebraKind::Polynomial => "polynomial",
            AlgebraKind::MixedFree => "mixed-free",
        })
    }
}

/// Free graded-commutative algebra over `Q`, described by the number of
/// generators in each degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeGradedAlgebra {
    generators: BTreeMap<u32, u64>,
    kind: AlgebraKind,
}

impl FreeGradedAlgebra {
    /// Builds the algebra and derives its kind from generator parities. The
    /// trivial algebra `Q` is reported as polynomial.
    pub fn from_generators(generators: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (degree, count) in generators {
            assert!(degree >= 1, "generators live in positive degree");
            if count > 0 {
                *map.entry(degree).or_insert(0) += count;
            }
        }
        FreeGradedAlgebra::with_kind(map)
    }

    fn with_kind(generators: BTreeMap<u32, u64>) -> Self {
        let any_odd = generators.keys().any(|d| d % 2 == 1);
        let any_even = generators.keys().any(|d| d % 2 == 0);
        let kind = match (any_odd, any_even) {
            (true, true) => AlgebraKind::MixedFree,
            (true, false) => AlgebraKind::Exterior,
            (false, _) => AlgebraKind::Polynomial,
        };
        FreeGradedAlgebra { generators, kind }
    }

    /// The free algebra with one generator per unit of rank. An empty table
    /// gives the trivial algebra, labelled by the parity of the space.
    pub fn from_ranks(ranks: &GradedRanks) -> Self {
        // entries are sorted, distinct and nonzero
        let mut algebra = FreeGradedAlgebra::with_kind(ranks.entries().collect());
        if algebra.generators.is_empty() && ranks.tag().is_odd() {
            algebra.kind = AlgebraKind::Exterior;
        }
        algebra
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    /// `(degree, count)` in increasing degree.
    pub fn generators(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.generators.iter().map(|(&d, &c)| (d, c))
    }

    /// Generator degrees with multiplicity, sorted.
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.generators()
            .flat_map(|(d, c)| std::iter::repeat_n(d, c as usize))
            .collect()
    }

    pub fn count(&self, degree: u32) -> u64 {
        self.generators.get(&degree).copied().unwrap_or(0)
    }

    pub fn generator_count(&self) -> u64 {
        self.generators.values().sum()
    }

    pub fn odd_generator_count(&self) -> u64 {
        self.generators()
            .filter(|(d, _)| d % 2 == 1)
            .map(|(_, c)| c)
            .sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Total dimension over `Q`: `2^n` for an exterior algebra on `n`
    /// generators, `None` as soon as there is an even generator.
    pub fn total_dimension(&self) -> Option<BigUint> {
        if self.generators.keys().any(|d| d % 2 == 0) {
            return None;
        }
        let n = usize::try_from(self.generator_count()).ok()?;
        Some(BigUint::one() << n)
    }

    /// Tensor product: the generator multisets are united.
    pub fn tensor(&self, other: &FreeGradedAlgebra) -> FreeGradedAlgebra {
        FreeGradedAlgebra::from_generators(self.generators().chain(other.generators()))
    }
}

/// The differential of a minimal model. Only the zero differential occurs
/// for the spaces in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Differential {
    Zero,
}

/// Sullivan minimal model `(ΛV, d)` of a formal space with free cohomology.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinimalModel {
    algebra: FreeGradedAlgebra,
    differential: Differential,
}

impl MinimalModel {
    /// Generators of `ΛV`; the same as those of the cohomology algebra.
    pub fn generators(&self) -> &FreeGradedAlgebra {
        &self.algebra
    }

    pub fn differential(&self) -> Differential {
        self.differential
    }

    /// `d(v)` for every generator `v`; always `0`.
    pub fn differential_of(&self, _generator_degree: u32) -> Option<u32> {
        match self.differential {
            Differential::Zero => None,
        }
    }
}

/// Minimal model of a space whose cohomology is the free algebra `a`.
pub fn minimal_model(a: &FreeGradedAlgebra) -> MinimalModel {
    MinimalModel {
        algebra: a.clone(),
        differential: Differential::Zero,
    }
}

/// Number of copies of `H*(𝒢ᵉ)` in `H*(𝒢)`, i.e. `|π₀(𝒢)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Copies {
    Exactly(u64),
    /// Finite, but not determined by the rational computation.
    SymbolicFinite,
}

impl fmt::Display for Copies {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Copies::Exactly(n) => write!(f, "{n}"),
            Copies::SymbolicFinite => f.write_str("|π₀(𝒢)|"),
        }
    }
}

/// `H*(𝒢) = ⊕_{|π₀(𝒢)|} H*(𝒢ᵉ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectSumDescription {
    pub summand: FreeGradedAlgebra,
    pub copies: Copies,
}

pub fn cohomology_g(g: &GroupSpec) -> FreeGradedAlgebra {
    FreeGradedAlgebra::from_ranks(&homotopy::ranks_g(g))
}

/// `H*(𝒢₀ᵉ)`: the identity component is an H-space, so the same argument as
/// for `𝒢ᵉ` makes it exterior on its rational homotopy.
pub fn cohomology_g0(g: &GroupSpec, base: BaseData) -> FreeGradedAlgebra {
    FreeGradedAlgebra::from_ranks(&homotopy::ranks_g0(g, base))
}

/// `H*(𝒢ᵉ)`: exterior on `rk π_j(𝒢)` generators of degree `j`.
pub fn cohomology_gauge_identity(g: &GroupSpec, base: BaseData) -> FreeGradedAlgebra {
    FreeGradedAlgebra::from_ranks(&homotopy::ranks_gauge(g, base))
}

/// `H*(B̃) = H*(B̃*)`: polynomial on `rk π_j(B̃)` generators of degree `j`.
pub fn cohomology_b_tilde(g: &GroupSpec, base: BaseData) -> FreeGradedAlgebra {
    FreeGradedAlgebra::from_ranks(&homotopy::ranks_b_tilde(g, base))
}

/// `H*(B*)`: polynomial on `rk π_j(B*)` generators of degree `j`. As algebras
/// `H*(B*) ≅ H*(B̃) ⊗ H*(B_G)`; the verify module checks that identity
/// against this degree-wise construction.
pub fn cohomology_b_star(g: &GroupSpec, base: BaseData) -> FreeGradedAlgebra {
    FreeGradedAlgebra::from_ranks(&homotopy::ranks_b_star(g, base))
}

/// `H*(B_G)`: polynomial with one generator of degree `2k` per exponent `k`.
pub fn cohomology_bg(g: &GroupSpec) -> FreeGradedAlgebra {
    let exponents = g.factors().iter().flat_map(|f| f.exponents());
    FreeGradedAlgebra::from_generators(exponents.map(|k| (2 * k, 1)))
}

pub fn cohomology_for(space: SpaceTag, g: &GroupSpec, base: BaseData) -> FreeGradedAlgebra {
    match space {
        SpaceTag::G => cohomology_g(g),
        SpaceTag::G0 => cohomology_g0(g, base),
        SpaceTag::Gauge | SpaceTag::GaugeTilde => cohomology_gauge_identity(g, base),
        SpaceTag::BTilde | SpaceTag::BTildeStar => cohomology_b_tilde(g, base),
        SpaceTag::BStar => cohomology_b_star(g, base),
        SpaceTag::BG => cohomology_bg(g),
    }
}

pub fn cohomology_full_gauge(g: &GroupSpec, base: BaseData) -> DirectSumDescription {
    let copies = match homotopy::connectivity_report(g) {
        Connectivity::Connected => Copies::Exactly(1),
        Connectivity::FiniteUnknown => Copies::SymbolicFinite,
    };
    DirectSumDescription {
        summand: cohomology_gauge_identity(g, base),
        copies,
    }
}

/// A named block of generators: the generators named `letter` split into
/// the part proportional to `b₂` and the part independent of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorPiece {
    pub letter: char,
    /// Degree -> generator count at `b₂ = 0`.
    pub constant: BTreeMap<u32, u64>,
    /// Degree -> coefficient of `b₂` in the generator count.
    pub per_b2: BTreeMap<u32, u64>,
}

impl GeneratorPiece {
    fn from_linear(letter: char, at_zero: &GradedRanks, at_one: &GradedRanks) -> Self {
        let constant: BTreeMap<u32, u64> = at_zero.entries().collect();
        let per_b2 = at_one
            .entries()
            .map(|(d, r)| (d, r - constant.get(&d).copied().unwrap_or(0)))
            .filter(|&(_, c)| c > 0)
            .collect();
        GeneratorPiece {
            letter,
            constant,
            per_b2,
        }
    }

    fn constant_only(letter: char, ranks: &GradedRanks) -> Self {
        GeneratorPiece {
            letter,
            constant: ranks.entries().collect(),
            per_b2: BTreeMap::new(),
        }
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        let mut all: Vec<u32> = self
            .constant
            .keys()
            .chain(self.per_b2.keys())
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all.into_iter()
    }

    /// Generator count in `degree` at the given `b₂`.
    pub fn count(&self, degree: u32, b2: u32) -> u64 {
        self.constant.get(&degree).copied().unwrap_or(0)
            + u64::from(b2) * self.per_b2.get(&degree).copied().unwrap_or(0)
    }
}

/// Splits the generators of `H*(space)` by origin, using the naming
/// `z` (from `𝒢₀`) and `w` (from `G`) for the gauge groups, `x` (from `B̃`) and
/// `y` (from `B_G`) for the quotient spaces.
pub fn generator_pieces(space: SpaceTag, g: &GroupSpec) -> Vec<GeneratorPiece> {
    let zero = BaseData::new(0);
    let one = BaseData::new(1);
    let g0 = || {
        GeneratorPiece::from_linear(
            'z',
            &homotopy::ranks_g0(g, zero),
            &homotopy::ranks_g0(g, one),
        )
    };
    let b_tilde = || {
        GeneratorPiece::from_linear(
            'x',
            &homotopy::ranks_b_tilde(g, zero),
            &homotopy::ranks_b_tilde(g, one),
        )
    };
    match space {
        SpaceTag::G => vec![GeneratorPiece::constant_only('w', &homotopy::ranks_g(g))],
        SpaceTag::G0 => vec![g0()],
        SpaceTag::Gauge | SpaceTag::GaugeTilde => {
            vec![
                g0(),
                GeneratorPiece::constant_only('w', &homotopy::ranks_g(g)),
            ]
        }
        SpaceTag::BTilde | SpaceTag::BTildeStar => vec![b_tilde()],
        SpaceTag::BStar => vec![
            b_tilde(),
            GeneratorPiece::constant_only('y', &homotopy::ranks_bg(g)),
        ],
        SpaceTag::BG => vec![GeneratorPiece::constant_only('y', &homotopy::ranks_bg(g))],
    }
}
