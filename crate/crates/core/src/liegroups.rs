//! Compact simply connected simple Lie groups: classification data, a parser
//! for product expressions such as `SU(2)xE8` or `Spin(7)^2`, and the rational
//! homotopy of the group itself.
//!
//! By the Hopf theorem `H*(G; Q)` is an exterior algebra on generators of
//! degrees `2k - 1`, where `k` runs over the exponents of `G` (the degrees of
//! the fundamental Weyl invariants). Since Lie groups are formal, this means
//! `rk π_{2k-1}(G) = ν(k)`, the multiplicity of `k`, and all other rational
//! homotopy groups vanish.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homotopy::{GradedRanks, SpaceTag};

/// Largest Cartan rank accepted for a single simple factor.
pub const MAX_FACTOR_RANK: u32 = 1024;

/// Largest repetition count accepted after `^`.
pub const MAX_REPETITION: u32 = 256;

/// Cartan-Killing family of a simple factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::G2,
        Family::F4,
        Family::E6,
        Family::E7,
        Family::E8,
    ];

    /// Fixed rank of an exceptional family, `None` for the classical series.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            Family::A | Family::B | Family::C | Family::D => None,
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
        }
    }

    /// Smallest rank for which the family is stored without being rewritten
    /// through a low-rank isomorphism.
    pub fn min_canonical_rank(self) -> u32 {
        match self {
            Family::A => 1,
            Family::B => 3,
            Family::C => 2,
            Family::D => 4,
            other => other.fixed_rank().unwrap_or(1),
        }
    }

    pub fn is_exceptional(self) -> bool {
        self.fixed_rank().is_some()
    }
}

/// A simple, compact, simply connected Lie group in canonical form.
///
/// Equality and hashing ignore `display_name`: `Sp(1)` and `SU(2)` are the
/// same factor.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimpleFactor {
    family: Family,
    rank: u32,
    display_name: String,
}

impl PartialEq for SimpleFactor {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}

impl Eq for SimpleFactor {}

impl std::hash::Hash for SimpleFactor {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.family.hash(state);
        self.rank.hash(state);
    }
}

/// Per-factor classification data, as consumed by the integrity checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorData {
    pub label: String,
    pub exponents: Vec<u32>,
    pub rank: u32,
    pub dimension: u64,
    pub center_order: u64,
    pub pi4_trivial: bool,
}

impl SimpleFactor {
    /// Builds the factors for Cartan type `family` of rank `rank`, rewriting
    /// low-rank coincidences (`B1, C1 -> A1`, `B2 -> C2`, `D2 -> A1 x A1`,
    /// `D3 -> A3`).
    pub fn from_cartan(family: Family, rank: u32) -> Result<Vec<SimpleFactor>, GroupParseError> {
        let factors = match (family, rank) {
            (f, r) if f.is_exceptional() => {
                if Some(r) != f.fixed_rank() {
                    return Err(GroupParseError::RankOutOfRange {
                        name: format!("{f:?}"),
                        message: format!("exceptional family has fixed rank, got {r}"),
                    });
                }
                vec![(f, r)]
            }
            (_, 0) => {
                return Err(GroupParseError::RankOutOfRange {
                    name: format!("{family:?}0"),
                    message: "rank must be positive".into(),
                })
            }
            (_, r) if r > MAX_FACTOR_RANK => {
                return Err(GroupParseError::RankOutOfRange {
                    name: format!("{family:?}{r}"),
                    message: format!("rank {r} exceeds the supported maximum {MAX_FACTOR_RANK}"),
                })
            }
            (Family::B, 1) | (Family::C, 1) => vec![(Family::A, 1)],
            (Family::B, 2) => vec![(Family::C, 2)],
            (Family::D, 1) => {
                return Err(GroupParseError::RankOutOfRange {
                    name: "Spin(2)".into(),
                    message: "Spin(2) is a circle, which is not semisimple".into(),
                })
            }
            (Family::D, 2) => vec![(Family::A, 1), (Family::A, 1)],
            (Family::D, 3) => vec![(Family::A, 3)],
            (f, r) => vec![(f, r)],
        };
        Ok(factors
            .into_iter()
            .map(|(family, rank)| SimpleFactor {
                family,
                rank,
                display_name: canonical_name(family, rank),
            })
            .collect())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// The name as written by the user (e.g. `Sp(1)`), or the canonical name
    /// for factors built programmatically.
    pub fn display_name(&self) -> &str {
        &self.display_name
    }

    /// Canonical name in terms of `SU`, `Spin`, `Sp` or the exceptional label.
    pub fn canonical_name(&self) -> String {
        canonical_name(self.family, self.rank)
    }

    /// Cartan label, e.g. `A1`, `D4`, `E8`.
    pub fn cartan_label(&self) -> String {
        match self.family {
            Family::A | Family::B | Family::C | Family::D => {
                format!("{:?}{}", self.family, self.rank)
            }
            f => format!("{f:?}"),
        }
    }

    fn with_display_name(mut self, name: &str) -> Self {
        self.display_name = name.to_string();
        self
    }

    /// Sorted exponent multiset.
    pub fn exponents(&self) -> Vec<u32> {
        let n = self.rank;
        let mut exps: Vec<u32> = match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
            Family::D => (1..n).map(|i| 2 * i).chain(std::iter::once(n)).collect(),
            Family::G2 => vec![2, 6],
            Family::F4 => vec![2, 6, 8, 12],
            Family::E6 => vec![2, 5, 6, 8, 9, 12],
            Family::E7 => vec![2, 6, 8, 10, 12, 14, 18],
            Family::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
        };
        exps.sort_unstable();
        exps
    }

    /// Dimension from the closed forms `n(n+2)`, `n(2n+1)`, `n(2n-1)`, which are
    /// independent of the exponent table.
    pub fn dimension(&self) -> u64 {
        let n = u64::from(self.rank);
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::G2 => 14,
            Family::F4 => 52,
            Family::E6 => 78,
            Family::E7 => 133,
            Family::E8 => 248,
        }
    }

    pub fn center_order(&self) -> u64 {
        match self.family {
            Family::A => u64::from(self.rank) + 1,
            Family::B | Family::C | Family::E7 => 2,
            Family::D => 4,
            Family::E6 => 3,
            Family::G2 | Family::F4 | Family::E8 => 1,
        }
    }

    /// Whether `π₄` of the factor vanishes. `π₄(Sp(n)) = Z/2` for every `n`,
    /// including `Sp(1) = SU(2)`; every other simple simply connected group has
    /// trivial `π₄`.
    pub fn pi4_is_trivial(&self) -> bool {
        !matches!(self.family, Family::C) && !(self.family == Family::A && self.rank == 1)
    }

    pub fn data(&self) -> FactorData {
        FactorData {
            label: self.cartan_label(),
            exponents: self.exponents(),
            rank: self.rank,
            dimension: self.dimension(),
            center_order: self.center_order(),
            pi4_trivial: self.pi4_is_trivial(),
        }
    }
}

fn canonical_name(family: Family, rank: u32) -> String {
    match family {
        Family::A => format!("SU({})", rank + 1),
        Family::B => format!("Spin({})", 2 * rank + 1),
        Family::C => format!("Sp({rank})"),
        Family::D => format!("Spin({})", 2 * rank),
        f => format!("{f:?}"),
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_name())
    }
}

/// A semisimple compact simply connected Lie group, written as an ordered
/// product of simple factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    factors: Vec<SimpleFactor>,
}

impl GroupSpec {
    /// Returns `None` when `factors` is empty.
    pub fn new(factors: Vec<SimpleFactor>) -> Option<Self> {
        if factors.is_empty() {
            None
        } else {
            Some(GroupSpec { factors })
        }
    }

    pub fn simple(factor: SimpleFactor) -> Self {
        GroupSpec {
            factors: vec![factor],
        }
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    /// Number of simple factors.
    pub fn simple_factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Same factors with display names reset to canonical names.
    pub fn canonical(&self) -> GroupSpec {
        GroupSpec {
            factors: self
                .factors
                .iter()
                .map(|f| {
                    let name = f.canonical_name();
                    f.clone().with_display_name(&name)
                })
                .collect(),
        }
    }

    pub fn exponents(&self) -> Vec<u32> {
        let mut exps: Vec<u32> = self.factors.iter().flat_map(|f| f.exponents()).collect();
        exps.sort_unstable();
        exps
    }

    pub fn rank(&self) -> u64 {
        self.factors.iter().map(|f| u64::from(f.rank())).sum()
    }

    pub fn dimension(&self) -> u64 {
        self.factors.iter().map(SimpleFactor::dimension).sum()
    }

    pub fn center_order(&self) -> BigUint {
        self.factors
            .iter()
            .map(|f| BigUint::from(f.center_order()))
            .product()
    }

    pub fn pi4_is_trivial(&self) -> bool {
        self.factors.iter().all(SimpleFactor::pi4_is_trivial)
    }

    pub fn max_exponent(&self) -> u32 {
        self.factors
            .iter()
            .flat_map(|f| f.exponents())
            .max()
            .unwrap_or(0)
    }

    /// `rk π_j(G) ⊗ Q`: multiplicity `ν(k)` at `j = 2k - 1`.
    pub fn rational_homotopy(&self) -> GradedRanks {
        let mut ranks = GradedRanks::empty(SpaceTag::G);
        for k in self.factors.iter().flat_map(SimpleFactor::exponents) {
            ranks.add(2 * k - 1, 1);
        }
        ranks
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = GroupParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group_spec(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupParseError {
    #[error("unsupported structure group `{name}`: {reason}")]
    UnsupportedGroup { name: String, reason: String },
    #[error("syntax error at offset {offset}: {message}")]
    SyntaxError { offset: usize, message: String },
    #[error("rank out of range for `{name}`: {message}")]
    RankOutOfRange { name: String, message: String },
}

const SIMPLY_CONNECTED_HINT: &str =
    "the rank formulas need a semisimple compact simply connected structure group";

/// Parses a product of `SU(n)`, `Spin(n)`, `Sp(n)`, `G2`, `F4`, `E6`, `E7`, `E8`
/// joined by `x` or `*`, with optional `^k` repetition. Family names are
/// case-insensitive and whitespace is ignored.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, GroupParseError> {
    let mut parser = Parser {
        chars: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        pos: 0,
        len: text.len(),
    };
    let factors = parser.expression()?;
    Ok(GroupSpec { factors })
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(i, _)| i)
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, GroupParseError> {
        Err(GroupParseError::SyntaxError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expression(&mut self) -> Result<Vec<SimpleFactor>, GroupParseError> {
        if self.chars.is_empty() {
            return self.syntax("empty group expression");
        }
        let mut factors = self.term()?;
        loop {
            match self.peek() {
                None => break,
                Some('x' | 'X' | '*') => {
                    self.pos += 1;
                    factors.extend(self.term()?);
                }
                Some('/') => {
                    let name: String = self.chars.iter().map(|&(_, c)| c).collect();
                    return Err(GroupParseError::UnsupportedGroup {
                        name,
                        reason: format!(
                            "quotients by central subgroups are not simply connected; \
                             {SIMPLY_CONNECTED_HINT}"
                        ),
                    });
                }
                Some(c) => return self.syntax(format!("unexpected character `{c}`")),
            }
        }
        Ok(factors)
    }

    fn term(&mut self) -> Result<Vec<SimpleFactor>, GroupParseError> {
        let atom = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let count = self.integer()?;
            if count == 0 {
                return self.syntax("repetition count must be positive");
            }
            if count > MAX_REPETITION {
                return self.syntax(format!(
                    "repetition count {count} exceeds the supported maximum {MAX_REPETITION}"
                ));
            }
            let mut out = Vec::with_capacity(atom.len() * count as usize);
            for _ in 0..count {
                out.extend(atom.iter().cloned());
            }
            return Ok(out);
        }
        Ok(atom)
    }

    fn identifier(&mut self) -> String {
        let mut ident = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() {
                ident.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        ident
    }

    fn integer(&mut self) -> Result<u32, GroupParseError> {
        let start = self.offset();
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return self.syntax("expected an integer");
        }
        digits.parse().map_err(|_| GroupParseError::SyntaxError {
            offset: start,
            message: format!("integer `{digits}` is too large"),
        })
    }

    fn parenthesized(&mut self, ident: &str) -> Result<u32, GroupParseError> {
        if self.peek() != Some('(') {
            return self.syntax(format!("expected `(` after `{ident}`"));
        }
        self.pos += 1;
        let n = self.integer()?;
        if self.peek() != Some(')') {
            return self.syntax("expected `)`");
        }
        self.pos += 1;
        Ok(n)
    }

    fn atom(&mut self) -> Result<Vec<SimpleFactor>, GroupParseError> {
        if self.peek().is_none() {
            return self.syntax("expected a group name");
        }
        let ident = self.identifier();
        if ident.is_empty() {
            let c = self.peek().unwrap_or(' ');
            return self.syntax(format!("expected a group name, found `{c}`"));
        }
        let upper = ident.to_ascii_uppercase();
        match upper.as_str() {
            "SU" => {
                let n = self.parenthesized(&ident)?;
                let name = format!("{ident}({n})");
                if n < 2 {
                    return Err(GroupParseError::RankOutOfRange {
                        name,
                        message: "SU(n) needs n >= 2".into(),
                    });
                }
                named(Family::A, n - 1, &name)
            }
            "SPIN" => {
                let n = self.parenthesized(&ident)?;
                let name = format!("{ident}({n})");
                if n < 3 {
                    return Err(GroupParseError::RankOutOfRange {
                        name,
                        message: "Spin(n) needs n >= 3".into(),
                    });
                }
                if n % 2 == 1 {
                    named(Family::B, (n - 1) / 2, &name)
                } else {
                    named(Family::D, n / 2, &name)
                }
            }
            "SP" => {
                let n = self.parenthesized(&ident)?;
                let name = format!("{ident}({n})");
                if n < 1 {
                    return Err(GroupParseError::RankOutOfRange {
                        name,
                        message: "Sp(n) needs n >= 1".into(),
                    });
                }
                named(Family::C, n, &name)
            }
            "G" | "F" | "E" => {
                let n = self.integer()?;
                let name = format!("{ident}{n}");
                let family = match (upper.as_str(), n) {
                    ("G", 2) => Family::G2,
                    ("F", 4) => Family::F4,
                    ("E", 6) => Family::E6,
                    ("E", 7) => Family::E7,
                    ("E", 8) => Family::E8,
                    _ => {
                        return Err(GroupParseError::SyntaxError {
                            offset: self.offset(),
                            message: format!("unknown exceptional group `{name}`"),
                        })
                    }
                };
                named(family, family.fixed_rank().unwrap_or(0), &name)
            }
            _ => Err(self.unsupported(&ident, &upper)),
        }
    }

    fn unsupported(&mut self, ident: &str, upper: &str) -> GroupParseError {
        let mut name = ident.to_string();
        // swallow an argument list or exponent for the error message
        if self.peek() == Some('(') {
            if let Ok(n) = self.parenthesized(ident) {
                name = format!("{ident}({n})");
            }
        } else if self.peek() == Some('^') {
            self.pos += 1;
            if let Ok(n) = self.integer() {
                name = format!("{ident}^{n}");
            }
        }
        let reason = match upper {
            "U" => {
                "U(n) has a central circle, so it is neither semisimple nor simply connected \
                    (π₁ = Z); use SU(n)"
            }
            "SO" => "SO(n) is not simply connected (π₁ = Z/2 for n >= 3); use Spin(n)",
            "O" => "O(n) is disconnected and not simply connected; use Spin(n)",
            "PSU" | "PU" | "PSP" | "PSO" | "PSPIN" => {
                "adjoint forms are quotients by the center and are not simply connected"
            }
            "T" => "a torus is abelian, not semisimple, and not simply connected",
            "GL" | "SL" | "PGL" | "PSL" => "only compact groups are supported",
            _ => {
                return GroupParseError::SyntaxError {
                    offset: self.offset(),
                    message: format!("unknown group name `{ident}`"),
                }
            }
        };
        GroupParseError::UnsupportedGroup {
            name,
            reason: format!("{reason}; {SIMPLY_CONNECTED_HINT}"),
        }
    }
}

fn named(family: Family, rank: u32, name: &str) -> Result<Vec<SimpleFactor>, GroupParseError> {
    let factors = SimpleFactor::from_cartan(family, rank).map_err(|e| match e {
        GroupParseError::RankOutOfRange { message, .. } => GroupParseError::RankOutOfRange {
            name: name.to_string(),
            message,
        },
        other => other,
    })?;
    Ok(factors
        .into_iter()
        .map(|f| f.with_display_name(name))
        .collect())
}

/// All canonical simple factors of rank at most `max_rank`, ordered by family
/// then rank.
pub fn simple_factors_up_to_rank(max_rank: u32) -> Vec<SimpleFactor> {
    let mut out = Vec::new();
    for family in Family::ALL {
        match family.fixed_rank() {
            Some(r) => {
                if r <= max_rank {
                    out.extend(SimpleFactor::from_cartan(family, r).expect("fixed rank"));
                }
            }
            None => {
                for r in family.min_canonical_rank()..=max_rank {
                    out.extend(SimpleFactor::from_cartan(family, r).expect("canonical rank"));
                }
            }
        }
    }
    out
}
