//! A small expression language for naming graphs on the command line.
//!
//! ```text
//! spec := ctor "(" args ")"
//! args := arg ("," arg)*
//! arg  := int | string | spec
//! ```
//!
//! Constructors: `kneser(t,r,n)`, `circ(r,n)`, `perm(n)`, `cycle(n)`,
//! `complete(n)`, `cayley_zn(n, d1, ...)`, `union(a,b)`,
//! `product(a,b,...)` and `load("file.json")`. `cycle(n)` is
//! `cayley_zn(n,1)` and `complete(n)` is `circ(1,n)`.

use std::fmt;

use thiserror::Error;

use crate::error::Result;
use crate::graph::{self, Graph};

pub const MAX_DEPTH: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Kneser { t: usize, r: usize, n: usize },
    Circ { r: usize, n: usize },
    Perm { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CayleyZn { n: usize, diffs: Vec<usize> },
    Union(Box<GraphSpec>, Box<GraphSpec>),
    Product(Vec<GraphSpec>),
    Load(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown constructor `{name}` at byte {offset}")]
    UnknownConstructor { offset: usize, name: String },
    #[error("`{name}` at byte {offset} takes {expected} arguments, got {found}")]
    Arity {
        offset: usize,
        name: String,
        expected: String,
        found: usize,
    },
    #[error("argument {index} of `{name}` at byte {offset} must be {expected}")]
    ArgumentType {
        offset: usize,
        name: String,
        index: usize,
        expected: &'static str,
    },
    #[error("out of range at byte {offset}: {message}")]
    Range { offset: usize, message: String },
    #[error("nesting deeper than {MAX_DEPTH} at byte {offset}")]
    TooDeep { offset: usize },
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "syntax",
            ParseError::UnknownConstructor { .. } => "unknown_constructor",
            ParseError::Arity { .. } => "arity",
            ParseError::ArgumentType { .. } => "argument_type",
            ParseError::Range { .. } => "range",
            ParseError::TooDeep { .. } => "too_deep",
        }
    }
}

#[derive(Debug)]
enum Arg {
    Int(usize),
    Str(String),
    Spec(GraphSpec),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, byte: u8) -> std::result::Result<(), ParseError> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.syntax(format!(
                "expected `{}`, found `{}`",
                byte as char, b as char
            ))),
            None => Err(self.syntax(format!("expected `{}`, found end of input", byte as char))),
        }
    }

    fn ident(&mut self) -> std::result::Result<(usize, String), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos || self.src[start].is_ascii_digit() {
            self.pos = start;
            return Err(self.syntax("expected a constructor name"));
        }
        Ok((
            start,
            String::from_utf8_lossy(&self.src[start..self.pos]).into_owned(),
        ))
    }

    fn int(&mut self) -> std::result::Result<usize, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse().map_err(|_| ParseError::Range {
            offset: start,
            message: format!("integer {text} does not fit"),
        })
    }

    fn string(&mut self) -> std::result::Result<String, ParseError> {
        self.pos += 1;
        let mut out = Vec::new();
        loop {
            match self.src.get(self.pos) {
                None => return Err(self.syntax("unterminated string")),
                Some(b'"') => {
                    self.pos += 1;
                    return String::from_utf8(out).map_err(|_| self.syntax("string is not UTF-8"));
                }
                Some(b'\\') => {
                    match self.src.get(self.pos + 1) {
                        Some(&c @ (b'"' | b'\\')) => out.push(c),
                        _ => {
                            self.pos += 1;
                            return Err(self.syntax("unsupported escape"));
                        }
                    }
                    self.pos += 2;
                }
                Some(&c) => {
                    out.push(c);
                    self.pos += 1;
                }
            }
        }
    }

    fn spec(&mut self, depth: usize) -> std::result::Result<GraphSpec, ParseError> {
        let (offset, name) = self.ident()?;
        if depth > MAX_DEPTH {
            return Err(ParseError::TooDeep { offset });
        }
        if !CONSTRUCTORS.contains(&name.as_str()) {
            return Err(ParseError::UnknownConstructor { offset, name });
        }
        self.expect(b'(')?;
        let mut args = Vec::new();
        if self.peek() != Some(b')') {
            loop {
                let arg = match self.peek() {
                    Some(b) if b.is_ascii_digit() => Arg::Int(self.int()?),
                    Some(b'"') => Arg::Str(self.string()?),
                    Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                        Arg::Spec(self.spec(depth + 1)?)
                    }
                    Some(b) => return Err(self.syntax(format!("unexpected `{}`", b as char))),
                    None => return Err(self.syntax("unexpected end of input")),
                };
                args.push(arg);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => break,
                    Some(b) => {
                        return Err(
                            self.syntax(format!("expected `,` or `)`, found `{}`", b as char))
                        )
                    }
                    None => return Err(self.syntax("expected `,` or `)`, found end of input")),
                }
            }
        }
        self.expect(b')')?;
        build(offset, &name, args)
    }
}

const CONSTRUCTORS: &[&str] = &[
    "kneser",
    "circ",
    "perm",
    "cycle",
    "complete",
    "cayley_zn",
    "union",
    "product",
    "load",
];

fn build(offset: usize, name: &str, args: Vec<Arg>) -> std::result::Result<GraphSpec, ParseError> {
    let arity = |expected: &str| ParseError::Arity {
        offset,
        name: name.to_string(),
        expected: expected.to_string(),
        found: args.len(),
    };
    let exact = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            Err(arity(&k.to_string()))
        }
    };
    let range = |message: String| ParseError::Range { offset, message };
    let ints = |args: &[Arg]| -> std::result::Result<Vec<usize>, ParseError> {
        args.iter()
            .enumerate()
            .map(|(i, a)| match a {
                Arg::Int(v) => Ok(*v),
                _ => Err(ParseError::ArgumentType {
                    offset,
                    name: name.to_string(),
                    index: i + 1,
                    expected: "an integer",
                }),
            })
            .collect()
    };
    let specs = |args: Vec<Arg>| -> std::result::Result<Vec<GraphSpec>, ParseError> {
        args.into_iter()
            .enumerate()
            .map(|(i, a)| match a {
                Arg::Spec(s) => Ok(s),
                _ => Err(ParseError::ArgumentType {
                    offset,
                    name: name.to_string(),
                    index: i + 1,
                    expected: "a graph spec",
                }),
            })
            .collect()
    };

    match name {
        "kneser" => {
            exact(3)?;
            let v = ints(&args)?;
            let (t, r, n) = (v[0], v[1], v[2]);
            if !(1 <= t && t <= r && r <= n) {
                return Err(range(format!("kneser({t},{r},{n}) needs 1 <= t <= r <= n")));
            }
            Ok(GraphSpec::Kneser { t, r, n })
        }
        "circ" => {
            exact(2)?;
            let v = ints(&args)?;
            let (r, n) = (v[0], v[1]);
            if r < 1 || n < 2 * r {
                return Err(range(format!("circ({r},{n}) needs r >= 1 and n >= 2r")));
            }
            Ok(GraphSpec::Circ { r, n })
        }
        "perm" | "cycle" | "complete" => {
            exact(1)?;
            let n = ints(&args)?[0];
            match name {
                "perm" if n < 2 => Err(range(format!("perm({n}) needs n >= 2"))),
                "cycle" if n < 3 => Err(range(format!("cycle({n}) needs n >= 3"))),
                "complete" if n < 1 => Err(range("complete(0) is not allowed".into())),
                "perm" => Ok(GraphSpec::Perm { n }),
                "cycle" => Ok(GraphSpec::Cycle { n }),
                _ => Ok(GraphSpec::Complete { n }),
            }
        }
        "cayley_zn" => {
            if args.is_empty() {
                return Err(arity("at least 1"));
            }
            let v = ints(&args)?;
            let n = v[0];
            if n < 1 {
                return Err(range("cayley_zn needs n >= 1".into()));
            }
            if let Some(d) = v[1..].iter().find(|&&d| d == 0 || d >= n) {
                return Err(range(format!(
                    "cayley_zn({n}) difference {d} must lie in 1..{n}"
                )));
            }
            Ok(GraphSpec::CayleyZn {
                n,
                diffs: v[1..].to_vec(),
            })
        }
        "union" => {
            exact(2)?;
            let mut s = specs(args)?;
            let b = s.pop().unwrap();
            let a = s.pop().unwrap();
            Ok(GraphSpec::Union(Box::new(a), Box::new(b)))
        }
        "product" => {
            if args.len() < 2 {
                return Err(arity("at least 2"));
            }
            let mut factors = Vec::new();
            for s in specs(args)? {
                match s {
                    GraphSpec::Product(inner) => factors.extend(inner),
                    other => factors.push(other),
                }
            }
            Ok(GraphSpec::Product(factors))
        }
        "load" => {
            exact(1)?;
            match args.into_iter().next().unwrap() {
                Arg::Str(path) => Ok(GraphSpec::Load(path)),
                _ => Err(ParseError::ArgumentType {
                    offset,
                    name: name.to_string(),
                    index: 1,
                    expected: "a quoted path",
                }),
            }
        }
        _ => unreachable!("constructor list checked by caller"),
    }
}

pub fn parse_spec(text: &str) -> std::result::Result<GraphSpec, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let spec = p.spec(1)?;
    if p.peek().is_some() {
        return Err(p.syntax("trailing input after spec"));
    }
    Ok(spec)
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Kneser { t, r, n } => write!(f, "kneser({t},{r},{n})"),
            GraphSpec::Circ { r, n } => write!(f, "circ({r},{n})"),
            GraphSpec::Perm { n } => write!(f, "perm({n})"),
            GraphSpec::Cycle { n } => write!(f, "cycle({n})"),
            GraphSpec::Complete { n } => write!(f, "complete({n})"),
            GraphSpec::CayleyZn { n, diffs } => {
                write!(f, "cayley_zn({n}")?;
                for d in diffs {
                    write!(f, ",{d}")?;
                }
                write!(f, ")")
            }
            GraphSpec::Union(a, b) => write!(f, "union({a},{b})"),
            GraphSpec::Product(factors) => {
                write!(f, "product(")?;
                for (i, s) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ")")
            }
            GraphSpec::Load(path) => {
                write!(f, "load(\"")?;
                for c in path.chars() {
                    if c == '"' || c == '\\' {
                        write!(f, "\\")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "\")")
            }
        }
    }
}

/// Builds the graph a spec names. Products are folded left to right.
pub fn eval_spec(spec: &GraphSpec) -> Result<Graph> {
    match spec {
        GraphSpec::Kneser { t, r, n } => graph::kneser_graph(*t, *r, *n),
        GraphSpec::Circ { r, n } => graph::circular_graph(*r, *n),
        GraphSpec::Perm { n } => graph::permutation_graph(*n),
        GraphSpec::Cycle { n } => graph::cycle_graph(*n),
        GraphSpec::Complete { n } => graph::complete_graph(*n),
        GraphSpec::CayleyZn { n, diffs } => graph::cayley_zn(*n, diffs),
        GraphSpec::Union(a, b) => graph::disjoint_union(&eval_spec(a)?, &eval_spec(b)?),
        GraphSpec::Product(factors) => {
            let mut acc = eval_spec(&factors[0])?;
            for f in &factors[1..] {
                acc = graph::direct_product(&acc, &eval_spec(f)?)?;
            }
            Ok(acc)
        }
        GraphSpec::Load(path) => graph::io::load(path),
    }
}

/// Parses and evaluates in one step.
pub fn graph_from_spec(text: &str) -> Result<Graph> {
    eval_spec(&parse_spec(text)?)
}
