//! Text form of [`FamilySpec`].
//!
//! ```text
//! spec   := kind ':' args
//! kind   := path | cycle | star | complete | spider | smith | gnk | ank | gpsq
//! args   := int                          (path, cycle, star, complete)
//!         | int ',' int                  (gnk, ank)
//!         | int ',' int ',' int          (spider)
//!         | 'H' digit [',' int]          (smith)
//!         | core (',' key '=' int){3}    (gpsq; keys p, s, q in any order)
//! core   := ('cycle' | 'complete') int
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Core, FamilySpec, SmithId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {pos}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos, message: message.into() })
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, c: char) -> Result<(), ParseError> {
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn word(&mut self) -> &'a str {
        let len = self.rest().find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(self.rest().len());
        let w = &self.rest()[..len];
        self.pos += len;
        w
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        if len == 0 {
            return self.err("expected an integer");
        }
        let value = self.rest()[..len].parse().or_else(|_| self.err("integer too large"))?;
        self.pos += len;
        Ok(value)
    }

    fn ints(&mut self, count: usize) -> Result<Vec<usize>, ParseError> {
        let mut out = vec![self.int()?];
        for _ in 1..count {
            self.eat(',')?;
            out.push(self.int()?);
        }
        Ok(out)
    }

    fn end(&self) -> Result<(), ParseError> {
        if self.rest().is_empty() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }
}

fn parse_smith(cur: &mut Cursor<'_>) -> Result<FamilySpec, ParseError> {
    cur.eat('H')?;
    let at = cur.pos;
    let idx = cur.int()?;
    let Some(&id) = idx.checked_sub(1).and_then(|i| SmithId::ALL.get(i)) else {
        return Err(ParseError { pos: at, message: format!("unknown Smith graph H{idx}") });
    };
    let size = if cur.rest().starts_with(',') {
        cur.eat(',')?;
        cur.int()?
    } else if id.is_infinite() {
        return cur.err(format!("{} needs a vertex count, e.g. smith:{},{}", id.name(), id.name(), id.min_size()));
    } else {
        id.min_size()
    };
    Ok(FamilySpec::Smith(id, size))
}

fn parse_gpsq(cur: &mut Cursor<'_>) -> Result<FamilySpec, ParseError> {
    let at = cur.pos;
    let core = match cur.word() {
        "cycle" => Core::Cycle(cur.int()?),
        "complete" => Core::Complete(cur.int()?),
        other => {
            return Err(ParseError {
                pos: at,
                message: format!("unknown core '{other}', expected cycle<N> or complete<N>"),
            })
        }
    };
    let mut vals: [Option<usize>; 3] = [None; 3];
    for _ in 0..3 {
        cur.eat(',')?;
        let at = cur.pos;
        let slot = match cur.word() {
            "p" => 0,
            "s" => 1,
            "q" => 2,
            other => {
                return Err(ParseError { pos: at, message: format!("unknown key '{other}'") })
            }
        };
        if vals[slot].is_some() {
            return Err(ParseError { pos: at, message: "duplicate key".into() });
        }
        cur.eat('=')?;
        vals[slot] = Some(cur.int()?);
    }
    let [Some(p), Some(s), Some(q)] = vals else { unreachable!("three distinct keys were read") };
    Ok(FamilySpec::Gpsq { core, p, s, q })
}

impl FromStr for FamilySpec {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor { text, pos: 0 };
        let kind_at = cur.pos;
        let kind = cur.word();
        cur.eat(':')?;
        let spec = match kind {
            "path" => FamilySpec::Path(cur.int()?),
            "cycle" => FamilySpec::Cycle(cur.int()?),
            "star" => FamilySpec::Star(cur.int()?),
            "complete" => FamilySpec::Complete(cur.int()?),
            "spider" => {
                let v = cur.ints(3)?;
                FamilySpec::Spider(v[0], v[1], v[2])
            }
            "gnk" => {
                let v = cur.ints(2)?;
                FamilySpec::Gnk { n: v[0], k: v[1] }
            }
            "ank" => {
                let v = cur.ints(2)?;
                FamilySpec::Ank { n: v[0], k: v[1] }
            }
            "smith" => parse_smith(&mut cur)?,
            "gpsq" => parse_gpsq(&mut cur)?,
            other => {
                return Err(ParseError { pos: kind_at, message: format!("unknown family '{other}'") })
            }
        };
        cur.end()?;
        Ok(spec)
    }
}

impl fmt::Display for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Core::Cycle(c) => write!(f, "cycle{c}"),
            Core::Complete(c) => write!(f, "complete{c}"),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Spider(a, b, c) => write!(f, "spider:{a},{b},{c}"),
            FamilySpec::Smith(id, size) if id.is_infinite() => write!(f, "smith:{},{size}", id.name()),
            FamilySpec::Smith(id, _) => write!(f, "smith:{}", id.name()),
            FamilySpec::Gpsq { core, p, s, q } => write!(f, "gpsq:{core},p={p},s={s},q={q}"),
            FamilySpec::Gnk { n, k } => write!(f, "gnk:{n},{k}"),
            FamilySpec::Ank { n, k } => write!(f, "ank:{n},{k}"),
        }
    }
}
