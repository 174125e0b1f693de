//! Jobs: a validated description of one command-line invocation.

use std::str::FromStr;

use crate::corealg::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Whittaker,
    Macdonald,
    Demazure,
    Torus,
    Verify,
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "whittaker" => Ok(Command::Whittaker),
            "macdonald" => Ok(Command::Macdonald),
            "demazure" => Ok(Command::Demazure),
            "torus" => Ok(Command::Torus),
            "verify" => Ok(Command::Verify),
            _ => Err(Error::InvalidInput(format!("unknown command {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(Error::InvalidInput(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_rank: usize,
    pub max_entry: i64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_rank: 4, max_entry: 8 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Job {
    pub command: Command,
    /// Number of variables `ℓ + 1`.
    pub rank: usize,
    pub point: Option<Vec<i64>>,
    pub lambda: Option<Vec<i64>>,
    pub q: Option<Rational>,
    pub t: Option<Rational>,
    /// `t = q^{−k}`.
    pub k: Option<i64>,
    pub trunc: usize,
    pub range: (i64, i64),
    pub suites: Vec<String>,
    pub normalized: bool,
    pub timing: bool,
    pub format: Format,
    pub limits: Limits,
}

impl Job {
    pub fn new(command: Command, rank: usize) -> Self {
        Job {
            command,
            rank,
            point: None,
            lambda: None,
            q: None,
            t: None,
            k: None,
            trunc: 8,
            range: (0, 3),
            suites: vec!["all".into()],
            normalized: false,
            timing: false,
            format: Format::Json,
            limits: Limits::default(),
        }
    }

    fn check_entries(&self, what: &str, v: &[i64]) -> Result<()> {
        if let Some(x) = v.iter().find(|x| x.abs() > self.limits.max_entry) {
            return Err(Error::InvalidInput(format!("{what} entry {x} exceeds the bound {}", self.limits.max_entry)));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.rank == 0 || self.rank > self.limits.max_rank {
            return Err(Error::InvalidInput(format!("rank {} outside 1..={}", self.rank, self.limits.max_rank)));
        }
        if let Some(p) = &self.point {
            self.check_entries("point", p)?;
            if p.len() != self.rank {
                return Err(Error::InvalidInput(format!("point {p:?} needs {} entries", self.rank)));
            }
        }
        if let Some(l) = &self.lambda {
            self.check_entries("partition", l)?;
            if l.len() > self.rank {
                return Err(Error::InvalidInput(format!("partition {l:?} has more than {} parts", self.rank)));
            }
            if l.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidInput(format!("partition {l:?} is not weakly decreasing")));
            }
        }
        self.check_entries("box", &[self.range.0, self.range.1])?;
        if self.range.0 > self.range.1 {
            return Err(Error::InvalidInput(format!("empty box {}..{}", self.range.0, self.range.1)));
        }
        if self.t.is_some() && self.k.is_some() {
            return Err(Error::InvalidInput("give --t or --k, not both".into()));
        }
        if self.trunc > 24 {
            return Err(Error::InvalidInput(format!("truncation {} above 24", self.trunc)));
        }
        match self.command {
            Command::Whittaker | Command::Torus | Command::Demazure if self.point.is_none() => {
                Err(Error::InvalidInput("this command needs --point".into()))
            }
            Command::Macdonald if self.lambda.is_none() => Err(Error::InvalidInput("macdonald needs --lambda".into())),
            _ => Ok(()),
        }
    }
}

/// `"1,0,-2"` → `[1, 0, -2]`.
pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::InvalidInput(format!("bad integer {x:?} in {s:?}"))))
        .collect()
}

/// `"2/7"` or `"3"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidInput(format!("bad rational {s:?}"));
    let r: Rational = s.trim().parse().map_err(|_| bad())?;
    Ok(r)
}

/// `"0..3"` → `(0, 3)` (inclusive).
pub fn parse_range(s: &str) -> Result<(i64, i64)> {
    let (a, b) = s.split_once("..").ok_or_else(|| Error::InvalidInput(format!("bad box {s:?}, expected lo..hi")))?;
    let p = |x: &str| x.trim().parse::<i64>().map_err(|_| Error::InvalidInput(format!("bad box bound {x:?}")));
    Ok((p(a)?, p(b)?))
}
