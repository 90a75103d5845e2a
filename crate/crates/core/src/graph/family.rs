use std::fmt;
use std::str::FromStr;

use super::{
    complete_bipartite, complete_graph, complete_multipartite, cycle_graph, harary_graph, petersen_graph, Graph,
};
use crate::error::{Error, Result};

/// A named graph family with its parameters, as written on the command line
/// (`kn:5`, `kpq:2,3`, `multi:2,2,3`, `harary:3,6`, `gpg:5,2`, `cycle:6`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Complete { n: usize },
    Bipartite { p: usize, q: usize },
    Multipartite { sizes: Vec<usize> },
    Harary { m: usize, n: usize },
    Petersen { n: usize, m: usize },
    Cycle { n: usize },
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Complete { n } => complete_graph(*n),
            Family::Bipartite { p, q } => complete_bipartite(*p, *q),
            Family::Multipartite { sizes } => complete_multipartite(sizes),
            Family::Harary { m, n } => harary_graph(*m, *n),
            Family::Petersen { n, m } => petersen_graph(*n, *m),
            Family::Cycle { n } => cycle_graph(*n),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Family::Complete { .. } => "complete",
            Family::Bipartite { .. } => "bipartite",
            Family::Multipartite { .. } => "multipartite",
            Family::Harary { .. } => "harary",
            Family::Petersen { .. } => "gpg",
            Family::Cycle { .. } => "cycle",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete { n } => write!(f, "kn:{n}"),
            Family::Bipartite { p, q } => write!(f, "kpq:{p},{q}"),
            Family::Multipartite { sizes } => {
                let parts: Vec<String> = sizes.iter().map(usize::to_string).collect();
                write!(f, "multi:{}", parts.join(","))
            }
            Family::Harary { m, n } => write!(f, "harary:{m},{n}"),
            Family::Petersen { n, m } => write!(f, "gpg:{n},{m}"),
            Family::Cycle { n } => write!(f, "cycle:{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let bad = |msg: String| Error::Parse { line: 1, msg };
        let (tag, args) =
            s.split_once(':').ok_or_else(|| bad(format!("family `{s}` must look like <tag>:<params>")))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| bad(format!("family `{s}`: {e}")))?;
        let arity = |want: usize| -> Result<()> {
            if nums.len() == want {
                Ok(())
            } else {
                Err(bad(format!("family `{tag}` takes {want} parameter(s), got {}", nums.len())))
            }
        };
        match tag {
            "kn" => {
                arity(1)?;
                Ok(Family::Complete { n: nums[0] })
            }
            "kpq" => {
                arity(2)?;
                Ok(Family::Bipartite { p: nums[0], q: nums[1] })
            }
            "multi" => Ok(Family::Multipartite { sizes: nums }),
            "harary" => {
                arity(2)?;
                Ok(Family::Harary { m: nums[0], n: nums[1] })
            }
            "gpg" => {
                arity(2)?;
                Ok(Family::Petersen { n: nums[0], m: nums[1] })
            }
            "cycle" => {
                arity(1)?;
                Ok(Family::Cycle { n: nums[0] })
            }
            other => Err(bad(format!("unknown family tag `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["kn:5", "kpq:2,3", "multi:2,2,3", "harary:3,6", "gpg:5,2", "cycle:7"] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
            f.build().unwrap();
        }
    }

    #[test]
    fn parse_errors() {
        assert!("kn".parse::<Family>().is_err());
        assert!("kn:5,6".parse::<Family>().is_err());
        assert!("zz:3".parse::<Family>().is_err());
        assert!("gpg:5,x".parse::<Family>().is_err());
    }
}
