use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// How a reduction tree picks among the applicable rule instances at a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum Strategy {
    /// Smallest instance in the canonical order.
    #[default]
    First,
    /// Largest instance in the canonical order.
    Last,
    /// Uniform choice from a seeded generator, consumed in depth-first order.
    Seeded(u64),
}

impl Strategy {
    pub(crate) fn chooser(self) -> Chooser {
        Chooser {
            strategy: self,
            rng: match self {
                Strategy::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
                _ => None,
            },
        }
    }

    /// `First`, `Last` and seeds `0..count - 2`, a convenient spread.
    pub fn family(count: usize) -> Vec<Strategy> {
        let mut out = vec![Strategy::First, Strategy::Last];
        out.extend((0..count.saturating_sub(2) as u64).map(Strategy::Seeded));
        out.truncate(count);
        out
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::First => f.write_str("first"),
            Strategy::Last => f.write_str("last"),
            Strategy::Seeded(s) => write!(f, "{s}"),
        }
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "first" => Ok(Strategy::First),
            "last" => Ok(Strategy::Last),
            other => other.parse().map(Strategy::Seeded).map_err(|_| {
                format!("unknown strategy `{other}` (use first, last or an integer seed)")
            }),
        }
    }
}

pub(crate) struct Chooser {
    strategy: Strategy,
    rng: Option<ChaCha8Rng>,
}

impl Chooser {
    pub(crate) fn pick(&mut self, len: usize) -> usize {
        assert!(len > 0);
        match self.strategy {
            Strategy::First => 0,
            Strategy::Last => len - 1,
            Strategy::Seeded(_) => self.rng.as_mut().unwrap().gen_range(0..len),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["first", "last", "17"] {
            assert_eq!(s.parse::<Strategy>().unwrap().to_string(), s);
        }
        assert!("random".parse::<Strategy>().is_err());
    }

    #[test]
    fn seeded_choice_is_reproducible() {
        let picks = |seed| {
            let mut c = Strategy::Seeded(seed).chooser();
            (0..20).map(|_| c.pick(5)).collect::<Vec<_>>()
        };
        assert_eq!(picks(3), picks(3));
        assert_ne!(picks(3), picks(4));
    }

    #[test]
    fn family_sizes() {
        assert_eq!(Strategy::family(1), vec![Strategy::First]);
        assert_eq!(Strategy::family(4).len(), 4);
        assert_eq!(Strategy::family(4)[3], Strategy::Seeded(1));
    }
}
