//! Family identifiers for the basic classical Lie superalgebras.
//!
//! Textual form (also accepted by the CLI):
//!
//! ```text
//! family   := name "(" int [ "," int ] [ ";a=" rational ] ")"
//! name     := "A" | "B" | "C" | "D" | "F" | "G"
//! rational := ["-"] digits [ "/" digits ]
//! ```
//!
//! `B(0,n)` is the orthosymplectic `osp(1|2n)`, `D(2,1;a=p/q)` is the
//! one-parameter exceptional family, `F(4)` and `G(3)` are the exceptional
//! algebras.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// `sl(m+1|n+1)`.
    A {
        m: u32,
        n: u32,
    },
    /// `osp(2m+1|2n)`, `m >= 1`.
    B {
        m: u32,
        n: u32,
    },
    /// `osp(1|2n)`.
    BZero {
        n: u32,
    },
    /// `osp(2|2n-2)`.
    C {
        n: u32,
    },
    /// `osp(2m|2n)`.
    D {
        m: u32,
        n: u32,
    },
    /// `D(2,1;alpha)`.
    D21 {
        alpha: Q,
    },
    F4,
    G3,
}

/// Short tag used by label tables and serialized documents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    A,
    B,
    BZero,
    C,
    D,
    D21,
    F4,
    G3,
}

impl FamilyId {
    pub fn a(m: u32, n: u32) -> Result<Self> {
        let f = FamilyId::A { m, n };
        f.validate()?;
        Ok(f)
    }

    /// `A(n,n)` is admitted here; it carries no real-form labels.
    pub fn a_permissive(m: u32, n: u32) -> Self {
        FamilyId::A { m, n }
    }

    pub fn b(m: u32, n: u32) -> Result<Self> {
        let f = if m == 0 {
            FamilyId::BZero { n }
        } else {
            FamilyId::B { m, n }
        };
        f.validate()?;
        Ok(f)
    }

    pub fn c(n: u32) -> Result<Self> {
        let f = FamilyId::C { n };
        f.validate()?;
        Ok(f)
    }

    pub fn d(m: u32, n: u32) -> Result<Self> {
        let f = FamilyId::D { m, n };
        f.validate()?;
        Ok(f)
    }

    pub fn d21(alpha: Q) -> Result<Self> {
        let f = FamilyId::D21 { alpha };
        f.validate()?;
        Ok(f)
    }

    pub fn tag(&self) -> FamilyTag {
        match self {
            FamilyId::A { .. } => FamilyTag::A,
            FamilyId::B { .. } => FamilyTag::B,
            FamilyId::BZero { .. } => FamilyTag::BZero,
            FamilyId::C { .. } => FamilyTag::C,
            FamilyId::D { .. } => FamilyTag::D,
            FamilyId::D21 { .. } => FamilyTag::D21,
            FamilyId::F4 => FamilyTag::F4,
            FamilyId::G3 => FamilyTag::G3,
        }
    }

    /// True for `A(n,n)`, which only the permissive constructor admits.
    pub fn is_square_a(&self) -> bool {
        matches!(self, FamilyId::A { m, n } if m == n)
    }

    /// Strict validation: rejects `A(n,n)`.
    pub fn validate(&self) -> Result<()> {
        self.validate_with(false)
    }

    pub fn validate_with(&self, permissive: bool) -> Result<()> {
        let bad = |constraint| {
            Err(Error::ParameterRange {
                family: self.to_string(),
                constraint,
            })
        };
        match *self {
            FamilyId::A { m, n } if m == n && !permissive => {
                bad("A(m,n) requires m != n (A(n,n) needs the permissive flag)")
            }
            FamilyId::A { m, n } if m == 0 && n == 0 => bad("A(0,0) is not simple"),
            FamilyId::B { m, n } if m < 1 || n < 1 => bad("B(m,n) requires m >= 1 and n >= 1"),
            FamilyId::BZero { n } if n < 1 => bad("B(0,n) requires n >= 1"),
            FamilyId::C { n } if n < 2 => bad("C(n) requires n >= 2"),
            FamilyId::D { m, n } if m < 2 || n < 1 => bad("D(m,n) requires m >= 2 and n >= 1"),
            FamilyId::D21 { alpha } if alpha == Q::from(0) || alpha == Q::from(-1) => {
                bad("D(2,1;alpha) requires alpha not in {0, -1}")
            }
            _ => Ok(()),
        }
    }

    pub fn parse_permissive(s: &str) -> Result<Self> {
        let f = parse_raw(s)?;
        f.validate_with(true)?;
        Ok(f)
    }

    /// Every family instance of the finite families with `1 <= rank params <= max`
    /// (plus the exceptional ones, `D(2,1;alpha)` at the given alphas).
    pub fn sweep(max: u32, alphas: &[Q]) -> Vec<FamilyId> {
        let mut out = Vec::new();
        for m in 0..=max {
            for n in 0..=max {
                if let Ok(f) = FamilyId::a(m, n) {
                    out.push(f);
                }
            }
        }
        for m in 0..=max {
            for n in 1..=max {
                if let Ok(f) = FamilyId::b(m, n) {
                    out.push(f);
                }
            }
        }
        for n in 2..=max {
            out.push(FamilyId::C { n });
        }
        for m in 2..=max {
            for n in 1..=max {
                out.push(FamilyId::D { m, n });
            }
        }
        for &alpha in alphas {
            if let Ok(f) = FamilyId::d21(alpha) {
                out.push(f);
            }
        }
        out.push(FamilyId::F4);
        out.push(FamilyId::G3);
        out
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::A { m, n } => write!(f, "A({m},{n})"),
            FamilyId::B { m, n } => write!(f, "B({m},{n})"),
            FamilyId::BZero { n } => write!(f, "B(0,{n})"),
            FamilyId::C { n } => write!(f, "C({n})"),
            FamilyId::D { m, n } => write!(f, "D({m},{n})"),
            FamilyId::D21 { alpha } => write!(f, "D(2,1;a={})", format_q(*alpha)),
            FamilyId::F4 => write!(f, "F(4)"),
            FamilyId::G3 => write!(f, "G(3)"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let f = parse_raw(s)?;
        f.validate()?;
        Ok(f)
    }
}

fn parse_raw(input: &str) -> Result<FamilyId> {
    let syntax = |reason: &str| Error::FamilySyntax {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let open = s.find('(').ok_or_else(|| syntax("expected '('"))?;
    if !s.ends_with(')') {
        return Err(syntax("expected trailing ')'"));
    }
    let name = &s[..open];
    let body = &s[open + 1..s.len() - 1];
    let (ints, alpha) = match body.split_once(';') {
        Some((ints, rest)) => {
            let value = rest
                .strip_prefix("a=")
                .ok_or_else(|| syntax("parameter must be written ';a=<rational>'"))?;
            let q = parse_q(value).ok_or_else(|| syntax("malformed rational"))?;
            (ints, Some(q))
        }
        None => (body, None),
    };
    let nums: Vec<u32> = ints
        .split(',')
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| syntax("expected nonnegative integers"))
        })
        .collect::<Result<_>>()?;

    match (name, nums.as_slice(), alpha) {
        ("A", [m, n], None) => Ok(FamilyId::A { m: *m, n: *n }),
        ("B", [0, n], None) => Ok(FamilyId::BZero { n: *n }),
        ("B", [m, n], None) => Ok(FamilyId::B { m: *m, n: *n }),
        ("C", [n], None) => Ok(FamilyId::C { n: *n }),
        ("D", [2, 1], Some(alpha)) => Ok(FamilyId::D21 { alpha }),
        ("D", [m, n], None) => Ok(FamilyId::D { m: *m, n: *n }),
        ("F", [4], None) => Ok(FamilyId::F4),
        ("G", [3], None) => Ok(FamilyId::G3),
        ("D", _, Some(_)) => Err(syntax("the alpha parameter only applies to D(2,1;a=...)")),
        _ => Err(syntax("unknown family or wrong number of parameters")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_family_form() {
        assert_eq!(
            "A(2,1)".parse::<FamilyId>().unwrap(),
            FamilyId::A { m: 2, n: 1 }
        );
        assert_eq!(
            "B(0,2)".parse::<FamilyId>().unwrap(),
            FamilyId::BZero { n: 2 }
        );
        assert_eq!(
            "B(2,2)".parse::<FamilyId>().unwrap(),
            FamilyId::B { m: 2, n: 2 }
        );
        assert_eq!("C(3)".parse::<FamilyId>().unwrap(), FamilyId::C { n: 3 });
        assert_eq!(
            "D(2,1)".parse::<FamilyId>().unwrap(),
            FamilyId::D { m: 2, n: 1 }
        );
        assert_eq!(
            "D(2,1;a=1/2)".parse::<FamilyId>().unwrap(),
            FamilyId::D21 {
                alpha: Q::new(1, 2)
            }
        );
        assert_eq!(
            "D(2,1;a=2)".parse::<FamilyId>().unwrap(),
            FamilyId::D21 { alpha: Q::from(2) }
        );
        assert_eq!("F(4)".parse::<FamilyId>().unwrap(), FamilyId::F4);
        assert_eq!("G(3)".parse::<FamilyId>().unwrap(), FamilyId::G3);
    }

    #[test]
    fn display_round_trips() {
        for f in FamilyId::sweep(3, &[Q::from(2), Q::new(-1, 3)]) {
            assert_eq!(f.to_string().parse::<FamilyId>().unwrap(), f);
        }
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        for bad in [
            "A(1,1)",
            "A(0,0)",
            "C(1)",
            "D(1,1)",
            "D(2,0)",
            "B(0,0)",
            "D(2,1;a=0)",
            "D(2,1;a=-1)",
        ] {
            let err = bad.parse::<FamilyId>().unwrap_err();
            assert!(matches!(err, Error::ParameterRange { .. }), "{bad}: {err}");
        }
    }

    #[test]
    fn square_a_needs_the_permissive_parser() {
        assert!("A(2,2)".parse::<FamilyId>().is_err());
        let f = FamilyId::parse_permissive("A(2,2)").unwrap();
        assert!(f.is_square_a());
    }

    #[test]
    fn rejects_malformed_text() {
        for bad in [
            "A2,1",
            "A(2,1",
            "Q(2)",
            "A(x,1)",
            "D(3,1;a=2)",
            "D(2,1;b=2)",
            "F(5)",
        ] {
            assert!(matches!(
                bad.parse::<FamilyId>().unwrap_err(),
                Error::FamilySyntax { .. }
            ));
        }
    }
}
