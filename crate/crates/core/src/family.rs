//! Graph family specifications and their flat string form.
//!
//! Grammar: `kind[:key=value,...]`, where a value is either an atom or a
//! parenthesized nested spec. For sweeps an atom may list alternatives
//! separated by `|`; [`expand_family`] turns such a spec into one instance
//! per combination.
//!
//! ```text
//! random-regular:n=1024,d=4,seed=7
//! power:k=2,inner=(cayley:recipe=elementary,p=5)
//! product:inner=(cycle:n=5),inner2=(petersen)
//! cayley:recipe=elementary,p=5|7|11
//! ```

use std::fmt;
use std::str::FromStr;

use crate::builders::{cartesian_product, graph_power, named_graph, random_regular, NamedGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::{build_cayley, Recipe, DEFAULT_ORDER_CAP};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    RandomRegular { n: usize, d: usize, seed: u64 },
    Cycle { n: usize },
    Complete { n: usize },
    Petersen,
    Cayley { recipe: Recipe, p: u64, level: u32 },
    Power { k: usize, inner: Box<FamilySpec> },
    Product { inner: Box<FamilySpec>, inner2: Box<FamilySpec> },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::RandomRegular { n, d, seed } => random_regular(*n, *d, *seed),
            FamilySpec::Cycle { n } => named_graph(NamedGraph::Cycle, *n),
            FamilySpec::Complete { n } => named_graph(NamedGraph::Complete, *n),
            FamilySpec::Petersen => named_graph(NamedGraph::Petersen, 10),
            FamilySpec::Cayley { recipe, p, level } => {
                Ok(build_cayley(*recipe, self.modulus(*p, *level)?, DEFAULT_ORDER_CAP)?.into_graph())
            }
            FamilySpec::Power { k, inner } => graph_power(&inner.build()?, *k),
            FamilySpec::Product { inner, inner2 } => cartesian_product(&inner.build()?, &inner2.build()?),
        }
    }

    fn modulus(&self, p: u64, level: u32) -> Result<u64> {
        p.checked_pow(level)
            .ok_or_else(|| Error::param(format!("{p}^{level} overflows")))
    }

    /// `p^level` for Cayley specs.
    pub fn cayley_modulus(&self) -> Option<u64> {
        match self {
            FamilySpec::Cayley { p, level, .. } => self.modulus(*p, *level).ok(),
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::RandomRegular { n, d, seed } => write!(f, "random-regular:n={n},d={d},seed={seed}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:n={n}"),
            FamilySpec::Complete { n } => write!(f, "complete:n={n}"),
            FamilySpec::Petersen => f.write_str("petersen"),
            FamilySpec::Cayley { recipe, p, level } => write!(f, "cayley:recipe={recipe},p={p},level={level}"),
            FamilySpec::Power { k, inner } => write!(f, "power:k={k},inner=({inner})"),
            FamilySpec::Product { inner, inner2 } => write!(f, "product:inner=({inner}),inner2=({inner2})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut all = expand_family(s)?;
        if all.len() != 1 {
            return Err(Error::Spec {
                position: 0,
                message: format!("expected a single instance, `{s}` expands to {}", all.len()),
            });
        }
        Ok(all.remove(0))
    }
}

/// Parses a spec that may contain `|` alternatives into its instances, in
/// lexicographic order of the alternative positions (first key slowest).
pub fn expand_family(s: &str) -> Result<Vec<FamilySpec>> {
    let mut parser = Parser { src: s, pos: 0 };
    let node = parser.node()?;
    if parser.pos != s.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    expand(&node).into_iter().map(|n| convert(&n)).collect()
}

#[derive(Debug, Clone)]
struct Node {
    kind: String,
    pos: usize,
    params: Vec<Param>,
}

#[derive(Debug, Clone)]
struct Param {
    key: String,
    pos: usize,
    value: Value,
}

#[derive(Debug, Clone)]
enum Value {
    Atoms(Vec<String>, usize),
    Nested(Node),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Spec {
            position: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn node(&mut self) -> Result<Node> {
        let pos = self.pos;
        let kind = self
            .take_while(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_')
            .to_string();
        if kind.is_empty() {
            return Err(self.error("expected a family kind"));
        }
        let mut params = Vec::new();
        if self.peek() == Some(':') {
            self.pos += 1;
            loop {
                params.push(self.param()?);
                if self.peek() == Some(',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        Ok(Node { kind, pos, params })
    }

    fn param(&mut self) -> Result<Param> {
        let pos = self.pos;
        let key = self
            .take_while(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
            .to_string();
        if key.is_empty() {
            return Err(self.error("expected a key"));
        }
        self.expect('=')
            .map_err(|_| self.error(format!("expected `=` after key `{key}`")))?;
        let value = if self.peek() == Some('(') {
            self.pos += 1;
            let inner = self.node()?;
            self.expect(')')?;
            Value::Nested(inner)
        } else {
            let vpos = self.pos;
            let raw = self.take_while(|c| !matches!(c, ',' | '(' | ')'));
            let atoms: Vec<String> = raw.split('|').map(str::to_string).collect();
            if atoms.iter().any(String::is_empty) {
                return Err(Error::Spec {
                    position: vpos,
                    message: format!("empty value for key `{key}`"),
                });
            }
            Value::Atoms(atoms, vpos)
        };
        Ok(Param { key, pos, value })
    }
}

/// Cartesian expansion of `|` alternatives.
fn expand(node: &Node) -> Vec<Node> {
    let mut acc = vec![Node {
        kind: node.kind.clone(),
        pos: node.pos,
        params: Vec::new(),
    }];
    for p in &node.params {
        let choices: Vec<Value> = match &p.value {
            Value::Atoms(atoms, pos) => atoms.iter().map(|a| Value::Atoms(vec![a.clone()], *pos)).collect(),
            Value::Nested(inner) => expand(inner).into_iter().map(Value::Nested).collect(),
        };
        acc = acc
            .into_iter()
            .flat_map(|partial| {
                choices.iter().map(move |v| {
                    let mut next = partial.clone();
                    next.params.push(Param {
                        key: p.key.clone(),
                        pos: p.pos,
                        value: v.clone(),
                    });
                    next
                })
            })
            .collect();
    }
    acc
}

struct Fields<'a> {
    node: &'a Node,
    used: Vec<bool>,
}

impl<'a> Fields<'a> {
    fn new(node: &'a Node) -> Self {
        Fields {
            node,
            used: vec![false; node.params.len()],
        }
    }

    fn find(&mut self, key: &str) -> Option<&'a Param> {
        let i = self.node.params.iter().position(|p| p.key == key)?;
        self.used[i] = true;
        Some(&self.node.params[i])
    }

    fn atom<T: FromStr>(&mut self, key: &str) -> Result<Option<T>> {
        let Some(p) = self.find(key) else { return Ok(None) };
        match &p.value {
            Value::Atoms(a, pos) => a[0].parse().map(Some).map_err(|_| Error::Spec {
                position: *pos,
                message: format!("bad value `{}` for key `{key}`", a[0]),
            }),
            Value::Nested(_) => Err(Error::Spec {
                position: p.pos,
                message: format!("key `{key}` expects a plain value"),
            }),
        }
    }

    fn required<T: FromStr>(&mut self, key: &str) -> Result<T> {
        self.atom(key)?.ok_or_else(|| Error::Spec {
            position: self.node.pos,
            message: format!("missing key `{key}` for `{}`", self.node.kind),
        })
    }

    fn nested(&mut self, key: &str) -> Result<Box<FamilySpec>> {
        match self.find(key) {
            Some(Param {
                value: Value::Nested(inner),
                ..
            }) => Ok(Box::new(convert(inner)?)),
            Some(p) => Err(Error::Spec {
                position: p.pos,
                message: format!("key `{key}` expects a parenthesized spec"),
            }),
            None => Err(Error::Spec {
                position: self.node.pos,
                message: format!("missing key `{key}` for `{}`", self.node.kind),
            }),
        }
    }

    fn finish(self) -> Result<()> {
        if let Some(i) = self.used.iter().position(|&u| !u) {
            let p = &self.node.params[i];
            return Err(Error::Spec {
                position: p.pos,
                message: format!("unknown key `{}` for `{}`", p.key, self.node.kind),
            });
        }
        Ok(())
    }
}

fn convert(node: &Node) -> Result<FamilySpec> {
    let mut f = Fields::new(node);
    let spec = match node.kind.as_str() {
        "random-regular" => FamilySpec::RandomRegular {
            n: f.required("n")?,
            d: f.required("d")?,
            seed: f.atom("seed")?.unwrap_or(0),
        },
        "cycle" => FamilySpec::Cycle { n: f.required("n")? },
        "complete" => FamilySpec::Complete { n: f.required("n")? },
        "petersen" => FamilySpec::Petersen,
        "cayley" => {
            let recipe = match f.find("recipe") {
                Some(Param {
                    value: Value::Atoms(a, pos),
                    ..
                }) => a[0].parse::<Recipe>().map_err(|e| Error::Spec {
                    position: *pos,
                    message: format!("bad value for key `recipe`: {e}"),
                })?,
                _ => {
                    return Err(Error::Spec {
                        position: node.pos,
                        message: "missing key `recipe` for `cayley`".into(),
                    })
                }
            };
            FamilySpec::Cayley {
                recipe,
                p: f.required("p")?,
                level: f.atom("level")?.unwrap_or(1),
            }
        }
        "power" | "power-of" => FamilySpec::Power {
            k: f.required("k")?,
            inner: f.nested("inner")?,
        },
        "product" | "product-of" => FamilySpec::Product {
            inner: f.nested("inner")?,
            inner2: f.nested("inner2")?,
        },
        other => {
            return Err(Error::Spec {
                position: node.pos,
                message: format!("unknown family kind `{other}`"),
            })
        }
    };
    f.finish()?;
    Ok(spec)
}
