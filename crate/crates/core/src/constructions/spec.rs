use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{ConstructionError, USquare};

/// A construction request. The text form is
/// `kind[:key=value,...][(arg,...)]`, for example `example-4.6:k=1,u2=u`,
/// `adjoin-z1(chain:k=2)` or `product(trivial,bool:n=2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConstructionSpec {
    Trivial,
    ChainLattice { k: usize },
    Example26 { k: usize },
    Example32 { k: usize },
    Example46 { k: usize, u_square: USquare },
    Example47 { k: usize, n: usize },
    AdjoinZ1(Box<ConstructionSpec>),
    AdjoinZ2Incomparable(Box<ConstructionSpec>),
    AdjoinZ2Chain(Box<ConstructionSpec>, USquare),
    Product(Box<ConstructionSpec>, Box<ConstructionSpec>),
    BooleanPower { n: usize },
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructionSpec as S;
        match self {
            S::Trivial => write!(f, "trivial"),
            S::ChainLattice { k } => write!(f, "chain:k={k}"),
            S::Example26 { k } => write!(f, "example-2.6:k={k}"),
            S::Example32 { k } => write!(f, "example-3.2:k={k}"),
            S::Example46 { k, u_square } => write!(f, "example-4.6:k={k},u2={u_square}"),
            S::Example47 { k, n } => write!(f, "example-4.7:k={k},n={n}"),
            S::AdjoinZ1(b) => write!(f, "adjoin-z1({b})"),
            S::AdjoinZ2Incomparable(b) => write!(f, "adjoin-z2-incomparable({b})"),
            S::AdjoinZ2Chain(b, u) => write!(f, "adjoin-z2-chain:u2={u}({b})"),
            S::Product(a, b) => write!(f, "product({a},{b})"),
            S::BooleanPower { n } => write!(f, "bool:n={n}"),
        }
    }
}

impl FromStr for ConstructionSpec {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_construction(s)
    }
}

fn syntax(spec: &str, message: impl Into<String>) -> ConstructionError {
    ConstructionError::Syntax {
        spec: spec.to_string(),
        message: message.into(),
    }
}

/// Splits on commas outside parentheses.
fn split_top(s: &str) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    parts.push(&s[start..]);
    Some(parts)
}

/// Argument list of a call. A piece of the form `key=value` with no `:` or
/// parentheses continues the parameter list of the argument before it, so
/// `product(example-4.6:k=1,u2=u,trivial)` has two arguments.
fn split_args(s: &str) -> Option<Vec<String>> {
    let mut args: Vec<String> = Vec::new();
    for piece in split_top(s)? {
        let continues = piece.contains('=')
            && !piece.contains(':')
            && !piece.contains('(')
            && args
                .last()
                .is_some_and(|a| a.contains(':') && !a.contains('('));
        match args.last_mut() {
            Some(last) if continues => {
                last.push(',');
                last.push_str(piece);
            }
            _ => args.push(piece.to_string()),
        }
    }
    Some(args)
}

struct Params<'a> {
    spec: &'a str,
    map: BTreeMap<&'a str, &'a str>,
}

impl<'a> Params<'a> {
    fn parse(spec: &'a str, text: Option<&'a str>) -> Result<Self, ConstructionError> {
        let mut map = BTreeMap::new();
        if let Some(text) = text {
            for kv in text.split(',') {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| syntax(spec, format!("expected key=value, found {kv:?}")))?;
                if map.insert(k.trim(), v.trim()).is_some() {
                    return Err(syntax(spec, format!("repeated key {k:?}")));
                }
            }
        }
        Ok(Params { spec, map })
    }

    fn take_usize(&mut self, key: &str) -> Result<usize, ConstructionError> {
        let v = self
            .map
            .remove(key)
            .ok_or_else(|| syntax(self.spec, format!("missing parameter {key}")))?;
        v.parse().map_err(|_| {
            syntax(
                self.spec,
                format!("{key}={v} is not a non-negative integer"),
            )
        })
    }

    fn take_u_square(&mut self, default: Option<USquare>) -> Result<USquare, ConstructionError> {
        match self.map.remove("u2") {
            None => default.ok_or_else(|| syntax(self.spec, "missing parameter u2")),
            Some("0") | Some("zero") => Ok(USquare::Zero),
            Some("c") => Ok(USquare::C),
            Some("u") => Ok(USquare::U),
            Some(v) => Err(syntax(self.spec, format!("u2={v} must be 0, c or u"))),
        }
    }

    fn finish(self) -> Result<(), ConstructionError> {
        match self.map.keys().next() {
            None => Ok(()),
            Some(k) => Err(syntax(self.spec, format!("unknown parameter {k}"))),
        }
    }
}

/// Parses the construction grammar.
pub fn parse_construction(text: &str) -> Result<ConstructionSpec, ConstructionError> {
    use ConstructionSpec as S;
    let s = text.trim();
    let (head, args) = match s.find('(') {
        Some(open) => {
            if !s.ends_with(')') {
                return Err(syntax(s, "unbalanced parentheses"));
            }
            let inner = &s[open + 1..s.len() - 1];
            let args = split_args(inner).ok_or_else(|| syntax(s, "unbalanced parentheses"))?;
            (&s[..open], Some(args))
        }
        None => (s, None),
    };
    let (kind, param_text) = match head.split_once(':') {
        Some((k, p)) => (k, Some(p)),
        None => (head, None),
    };
    let mut params = Params::parse(s, param_text)?;
    let sub = |i: usize| -> Result<Box<ConstructionSpec>, ConstructionError> {
        let args = args
            .as_ref()
            .ok_or_else(|| syntax(s, "missing argument list"))?;
        Ok(Box::new(parse_construction(&args[i])?))
    };
    let arity = |want: usize| -> Result<(), ConstructionError> {
        let found = args.as_ref().map_or(0, |a| a.len());
        if found != want {
            return Err(syntax(
                s,
                format!("{kind} takes {want} arguments, found {found}"),
            ));
        }
        Ok(())
    };
    let spec = match kind {
        "trivial" => {
            arity(0)?;
            S::Trivial
        }
        "chain" => {
            arity(0)?;
            S::ChainLattice {
                k: params.take_usize("k")?,
            }
        }
        "example-2.6" => {
            arity(0)?;
            S::Example26 {
                k: params.take_usize("k")?,
            }
        }
        "example-3.2" => {
            arity(0)?;
            S::Example32 {
                k: params.take_usize("k")?,
            }
        }
        "example-4.6" => {
            arity(0)?;
            S::Example46 {
                k: params.take_usize("k")?,
                u_square: params.take_u_square(None)?,
            }
        }
        "example-4.7" => {
            arity(0)?;
            S::Example47 {
                k: params.take_usize("k")?,
                n: params.take_usize("n")?,
            }
        }
        "bool" => {
            arity(0)?;
            S::BooleanPower {
                n: params.take_usize("n")?,
            }
        }
        "adjoin-z1" => {
            arity(1)?;
            S::AdjoinZ1(sub(0)?)
        }
        "adjoin-z2-incomparable" => {
            arity(1)?;
            S::AdjoinZ2Incomparable(sub(0)?)
        }
        "adjoin-z2-chain" => {
            arity(1)?;
            let u = params.take_u_square(Some(USquare::U))?;
            S::AdjoinZ2Chain(sub(0)?, u)
        }
        "product" => {
            arity(2)?;
            S::Product(sub(0)?, sub(1)?)
        }
        other => return Err(syntax(s, format!("unknown construction {other:?}"))),
    };
    params.finish()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_round_trips() {
        for text in [
            "example-2.6:k=2",
            "example-3.2:k=3",
            "example-4.6:k=1,u2=u",
            "example-4.7:k=4,n=2",
            "chain:k=3",
            "bool:n=3",
            "trivial",
            "adjoin-z1(chain:k=2)",
            "adjoin-z2-chain:u2=c(trivial)",
            "product(example-4.6:k=1,u2=0,product(trivial,bool:n=2))",
        ] {
            let spec = parse_construction(text).unwrap();
            assert_eq!(spec.to_string(), text);
        }
    }

    #[test]
    fn bad_specs_are_rejected() {
        for text in [
            "chain",
            "chain:k=x",
            "chain:k=2,j=1",
            "product(trivial)",
            "adjoin-z1(trivial",
            "bogus:k=1",
            "trivial(trivial)",
        ] {
            assert!(parse_construction(text).is_err(), "{text}");
        }
    }
}
