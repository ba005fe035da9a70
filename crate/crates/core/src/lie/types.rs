use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
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
    pub fn from_char(c: char) -> Option<Series> {
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

    pub fn letter(self) -> char {
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
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleFactor {
    pub series: Series,
    pub rank: usize,
}

impl SimpleFactor {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(SimpleFactor { series, rank })
        } else {
            Err(Error::InvalidType(format!("{}{} is not a simple type", series.letter(), rank)))
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        let l = self.rank;
        match self.series {
            Series::A => fact(l + 1),
            Series::B | Series::C => (1u128 << l) * fact(l),
            Series::D => (1u128 << (l - 1)) * fact(l),
            Series::E => match l {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1152,
            Series::G => 12,
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        let l = self.rank;
        match self.series {
            Series::A => l * (l + 1) / 2,
            Series::B | Series::C => l * l,
            Series::D => l * (l - 1),
            Series::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

/// A reductive type: simple factors times a central torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LieType {
    pub factors: Vec<SimpleFactor>,
    pub torus_rank: usize,
}

impl LieType {
    pub fn new(factors: Vec<SimpleFactor>, torus_rank: usize) -> Result<Self> {
        if factors.is_empty() && torus_rank == 0 {
            return Err(Error::InvalidType("trivial group".into()));
        }
        Ok(LieType { factors, torus_rank })
    }

    pub fn simple(series: Series, rank: usize) -> Result<Self> {
        Self::new(vec![SimpleFactor::new(series, rank)?], 0)
    }

    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn rank(&self) -> usize {
        self.semisimple_rank() + self.torus_rank
    }

    pub fn weyl_order(&self) -> u128 {
        self.factors.iter().map(|f| f.weyl_order()).product()
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1 && self.torus_rank == 0
    }

    /// Parses "A3", "B3xA1+T1", "T2".
    pub fn parse(s: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        let mut factors = Vec::new();
        let mut torus = 0;
        let skip_ws = |i: &mut usize| {
            while *i < chars.len() && chars[*i].is_whitespace() {
                *i += 1;
            }
        };
        let number = |i: &mut usize| -> Option<usize> {
            let start = *i;
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            chars[start..*i].iter().collect::<String>().parse().ok()
        };
        skip_ws(&mut i);
        if i == chars.len() {
            return Err(err(0, "empty type"));
        }
        loop {
            skip_ws(&mut i);
            let at = i;
            let c = *chars.get(i).ok_or_else(|| err(i, "expected a factor"))?;
            i += 1;
            if c == 'T' || c == 't' {
                torus += number(&mut i).ok_or_else(|| err(i, "expected torus rank"))?;
            } else {
                let series = Series::from_char(c).ok_or_else(|| err(at, "unknown series letter"))?;
                let rank = number(&mut i).ok_or_else(|| err(i, "expected rank"))?;
                factors.push(SimpleFactor::new(series, rank)?);
            }
            skip_ws(&mut i);
            match chars.get(i) {
                None => break,
                Some('x') | Some('X') | Some('*') | Some('+') => i += 1,
                Some(_) => return Err(err(i, "expected 'x', '+' or end of input")),
            }
        }
        LieType::new(factors, torus)
    }
}

impl FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LieType::parse(s)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("x"))?;
        if self.torus_rank > 0 {
            if !parts.is_empty() {
                write!(f, "+")?;
            }
            write!(f, "T{}", self.torus_rank)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let t = LieType::parse("B3xA1+T1").unwrap();
        assert_eq!(t.factors.len(), 2);
        assert_eq!(t.torus_rank, 1);
        assert_eq!(t.rank(), 5);
        assert_eq!(t.to_string(), "B3xA1+T1");
        assert_eq!(LieType::parse("e6").unwrap().to_string(), "E6");
        assert_eq!(LieType::parse("T2").unwrap().rank(), 2);
    }

    #[test]
    fn invalid_types() {
        for s in ["E5", "F3", "G3", "D2", "B1", "A0", "", "Q2", "A2y"] {
            assert!(LieType::parse(s).is_err(), "{s}");
        }
        assert!(matches!(LieType::parse("A2 ? B2"), Err(Error::Parse { pos: 3, .. })));
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(LieType::parse("A3").unwrap().weyl_order(), 24);
        assert_eq!(LieType::parse("B3").unwrap().weyl_order(), 48);
        assert_eq!(LieType::parse("D4").unwrap().weyl_order(), 192);
        assert_eq!(LieType::parse("G2xA1").unwrap().weyl_order(), 24);
    }
}
