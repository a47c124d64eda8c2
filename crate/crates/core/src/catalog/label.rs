use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CatalogError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub const ALL: [Series; 7] = [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G];

    fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// An irreducible Cartan type. Only canonical labels are admissible:
/// `A1+`, `B2+`, `C3+`, `D4+`, `E6..E8`, `F4`, `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanLabel {
    series: Series,
    rank: usize,
}

impl CartanLabel {
    pub fn new(series: Series, rank: usize) -> Result<Self, CatalogError> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanLabel { series, rank })
        } else {
            Err(CatalogError::Inadmissible(format!("{series}{rank}")))
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// |R| for the type.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1),
            Series::B | Series::C => 2 * n * n,
            Series::D => 2 * n * (n - 1),
            Series::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Series::F => 48,
            Series::G => 12,
        }
    }

    /// Every admissible label of rank at most `max_rank`, sorted.
    pub fn all_up_to(max_rank: usize) -> Vec<CartanLabel> {
        let mut out = Vec::new();
        for s in Series::ALL {
            for r in 1..=max_rank {
                if let Ok(l) = CartanLabel::new(s, r) {
                    out.push(l);
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for CartanLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for CartanLabel {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = chars
            .next()
            .and_then(Series::from_letter)
            .ok_or_else(|| CatalogError::Parse(format!("bad Cartan label {s:?}")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| CatalogError::Parse(format!("bad Cartan label {s:?}")))?;
        CartanLabel::new(series, rank)
    }
}

impl Serialize for CartanLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CartanLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A semisimple type written as `A1+A1`, `B3`, ... (order preserved as
/// written; [`TypeSpec::sorted`] gives the canonical multiset).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TypeSpec(pub Vec<CartanLabel>);

impl TypeSpec {
    pub fn labels(&self) -> &[CartanLabel] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(CartanLabel::rank).sum()
    }

    pub fn sorted(mut self) -> Self {
        self.0.sort();
        self
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for TypeSpec {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Err(CatalogError::Parse("empty type string".into()));
        }
        s.split('+').map(str::parse).collect::<Result<Vec<_>, _>>().map(TypeSpec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_labels() {
        let l: CartanLabel = "B3".parse().unwrap();
        assert_eq!((l.series(), l.rank()), (Series::B, 3));
        assert_eq!(l.to_string(), "B3");
        assert!("C2".parse::<CartanLabel>().is_err());
        assert!("D3".parse::<CartanLabel>().is_err());
        assert!("B1".parse::<CartanLabel>().is_err());
        assert!("E9".parse::<CartanLabel>().is_err());
        assert!("G3".parse::<CartanLabel>().is_err());
        assert!("X2".parse::<CartanLabel>().is_err());
        assert!("A".parse::<CartanLabel>().is_err());
    }

    #[test]
    fn parse_type_spec() {
        let t: TypeSpec = "A1+A1".parse().unwrap();
        assert_eq!(t.labels().len(), 2);
        assert_eq!(t.rank(), 2);
        assert_eq!(t.to_string(), "A1+A1");
        let t: TypeSpec = "G2+A1".parse().unwrap();
        assert_eq!(t.sorted().to_string(), "A1+G2");
        assert!("A1+".parse::<TypeSpec>().is_err());
        assert!("".parse::<TypeSpec>().is_err());
    }

    #[test]
    fn catalog_up_to_rank_2() {
        let names: Vec<String> = CartanLabel::all_up_to(2).iter().map(ToString::to_string).collect();
        assert_eq!(names, ["A1", "A2", "B2", "G2"]);
    }
}
