use std::fmt;
use std::str::FromStr;

use super::{ops, Graph};
use crate::error::{Error, Result};

/// A named graph family member, or a construction over other specs.
///
/// Vertex numbering:
/// * `Path(n)`: `0 - 1 - … - (n-1)`; `Cycle(n)` adds `(n-1) - 0`.
/// * `Multipartite(parts)`: parts laid out consecutively in ascending size.
/// * `Rook(n, m)`: `K_n □ K_m`, cell `(i, j)` is `i*m + j`.
/// * `Sharpness { b, delta, k }`: `b` copies of `K_{k+1}` first, then
///   `delta - k` independent vertices joined to all of them.
/// * Products follow [`ops::cartesian_product`]; unions and joins place the
///   left operand first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Edgeless graph.
    Empty(usize),
    /// Complete multipartite graph; part sizes ascending.
    Multipartite(Vec<usize>),
    Rook(usize, usize),
    /// Union of `b` disjoint `K_{k+1}` joined to an independent set of
    /// `delta - k` vertices; attains `Γ×k,t = n − δ + k`.
    Sharpness {
        b: usize,
        delta: usize,
        k: usize,
    },
    Union(Vec<FamilySpec>),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Cartesian(Box<FamilySpec>, Box<FamilySpec>),
    Cross(Box<FamilySpec>, Box<FamilySpec>),
    /// Canonical k-join, see [`ops::k_join`].
    KJoin(Box<FamilySpec>, Box<FamilySpec>, usize),
}

impl FamilySpec {
    /// Complete multipartite spec with the parts sorted ascending.
    pub fn multipartite(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable();
        FamilySpec::Multipartite(parts)
    }

    pub fn cartesian(a: FamilySpec, b: FamilySpec) -> Self {
        FamilySpec::Cartesian(Box::new(a), Box::new(b))
    }

    pub fn cross(a: FamilySpec, b: FamilySpec) -> Self {
        FamilySpec::Cross(Box::new(a), Box::new(b))
    }

    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let positive = |what: &str, v: usize| {
            if v == 0 {
                Err(Error::Parameter(format!("{what} must be positive")))
            } else {
                Ok(())
            }
        };
        match self {
            Path(n) | Complete(n) | Empty(n) => positive("order", *n),
            Cycle(n) => {
                if *n < 3 {
                    Err(Error::Parameter(format!(
                        "cycle needs at least 3 vertices, got {n}"
                    )))
                } else {
                    Ok(())
                }
            }
            Multipartite(parts) => {
                if parts.is_empty() {
                    return Err(Error::Parameter(
                        "multipartite graph needs at least one part".into(),
                    ));
                }
                for &p in parts {
                    positive("part size", p)?;
                }
                if parts.windows(2).any(|w| w[0] > w[1]) {
                    return Err(Error::Parameter(format!(
                        "parts {parts:?} are not ascending"
                    )));
                }
                Ok(())
            }
            Rook(n, m) => {
                positive("rook rows", *n)?;
                positive("rook columns", *m)
            }
            Sharpness { b, delta, k } => {
                if *k < 1 || *delta < k + 1 {
                    return Err(Error::Parameter(format!(
                        "sharpness family needs delta >= k+1 >= 2, got delta={delta}, k={k}"
                    )));
                }
                let min_b = delta.div_ceil(k + 1);
                if *b < min_b.max(1) {
                    return Err(Error::Parameter(format!(
                        "sharpness family needs b >= ceil(delta/(k+1)) = {min_b}, got {b}"
                    )));
                }
                Ok(())
            }
            Union(specs) => {
                if specs.is_empty() {
                    return Err(Error::Parameter("union of nothing".into()));
                }
                specs.iter().try_for_each(FamilySpec::validate)
            }
            Join(a, b) | Cartesian(a, b) | Cross(a, b) => {
                a.validate()?;
                b.validate()
            }
            KJoin(a, b, k) => {
                positive("k", *k)?;
                a.validate()?;
                b.validate()
            }
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        use FamilySpec::*;
        let g = match self {
            Path(n) => Graph::from_fn(*n, |u, v| v == u + 1),
            Cycle(n) => Graph::from_fn(*n, |u, v| v == u + 1 || (u == 0 && v == n - 1)),
            Complete(n) => Graph::from_fn(*n, |_, _| true),
            Empty(n) => Graph::empty(*n),
            Multipartite(parts) => {
                let part_of: Vec<usize> = parts
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &p)| std::iter::repeat_n(i, p))
                    .collect();
                Graph::from_fn(part_of.len(), |u, v| part_of[u] != part_of[v])
            }
            Rook(n, m) => {
                ops::cartesian_product(&Complete(*n).generate()?, &Complete(*m).generate()?)
            }
            Sharpness { b, delta, k } => {
                let cliques: Vec<Graph> = (0..*b)
                    .map(|_| Complete(k + 1).generate())
                    .collect::<Result<_>>()?;
                ops::join(&ops::disjoint_union(&cliques), &Graph::empty(delta - k))
            }
            Union(specs) => {
                let parts: Vec<Graph> = specs
                    .iter()
                    .map(FamilySpec::generate)
                    .collect::<Result<_>>()?;
                ops::disjoint_union(&parts)
            }
            Join(a, b) => ops::join(&a.generate()?, &b.generate()?),
            Cartesian(a, b) => ops::cartesian_product(&a.generate()?, &b.generate()?),
            Cross(a, b) => ops::cross_product(&a.generate()?, &b.generate()?),
            KJoin(a, b, k) => ops::k_join(&a.generate()?, &b.generate()?, *k)?,
        };
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            Empty(n) => write!(f, "empty:{n}"),
            Multipartite(parts) => {
                f.write_str("multipartite:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("-")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Rook(n, m) => write!(f, "rook:{n},{m}"),
            Sharpness { b, delta, k } => write!(f, "sharp:{b},{delta},{k}"),
            Union(specs) => {
                f.write_str("union(")?;
                for (i, s) in specs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str(")")
            }
            Join(a, b) => write!(f, "join({a},{b})"),
            Cartesian(a, b) => write!(f, "cart({a},{b})"),
            Cross(a, b) => write!(f, "cross({a},{b})"),
            KJoin(a, b, k) => write!(f, "kjoin({a},{b},{k})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the `name:arg[,arg…]` grammar, with `cart(a,b)`, `cross(a,b)`,
    /// `join(a,b)`, `union(a,…)` and `kjoin(a,b,k)` combinators. `Kn`, `Cn`
    /// and `Pn` are accepted as shorthands for complete graphs, cycles and
    /// paths.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        spec.validate()?;
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Argument(format!(
            "bad family spec {:?} at offset {}: {what}",
            self.src, self.pos
        ))
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        self.pos += len;
        &self.src[start..self.pos]
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        let v = self.rest()[..len]
            .parse()
            .map_err(|_| self.error("number out of range"))?;
        self.pos += len;
        Ok(v)
    }

    fn numbers(&mut self, count: usize) -> Result<Vec<usize>> {
        let mut out = vec![self.number()?];
        while out.len() < count {
            self.expect(',')?;
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let name = self.ident().to_string();
        match name.as_str() {
            "cart" | "cross" | "join" => {
                self.expect('(')?;
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                self.expect(')')?;
                let (a, b) = (Box::new(a), Box::new(b));
                Ok(match name.as_str() {
                    "cart" => FamilySpec::Cartesian(a, b),
                    "cross" => FamilySpec::Cross(a, b),
                    _ => FamilySpec::Join(a, b),
                })
            }
            "kjoin" => {
                self.expect('(')?;
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                self.expect(',')?;
                let k = self.number()?;
                self.expect(')')?;
                Ok(FamilySpec::KJoin(Box::new(a), Box::new(b), k))
            }
            "union" => {
                self.expect('(')?;
                let mut specs = vec![self.spec()?];
                while self.eat(',') {
                    specs.push(self.spec()?);
                }
                self.expect(')')?;
                Ok(FamilySpec::Union(specs))
            }
            "K" | "C" | "P" => {
                let n = self.number()?;
                Ok(match name.as_str() {
                    "K" => FamilySpec::Complete(n),
                    "C" => FamilySpec::Cycle(n),
                    _ => FamilySpec::Path(n),
                })
            }
            _ => {
                self.expect(':')?;
                match name.as_str() {
                    "path" => Ok(FamilySpec::Path(self.number()?)),
                    "cycle" => Ok(FamilySpec::Cycle(self.number()?)),
                    "complete" => Ok(FamilySpec::Complete(self.number()?)),
                    "empty" => Ok(FamilySpec::Empty(self.number()?)),
                    "rook" => {
                        let v = self.numbers(2)?;
                        Ok(FamilySpec::Rook(v[0], v[1]))
                    }
                    "sharp" => {
                        let v = self.numbers(3)?;
                        Ok(FamilySpec::Sharpness {
                            b: v[0],
                            delta: v[1],
                            k: v[2],
                        })
                    }
                    "multipartite" => {
                        let mut parts = vec![self.number()?];
                        while self.eat('-') {
                            parts.push(self.number()?);
                        }
                        Ok(FamilySpec::multipartite(parts))
                    }
                    _ => Err(self.error(&format!("unknown family {name:?}"))),
                }
            }
        }
    }
}
