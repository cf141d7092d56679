//! Named graph families and the compositional family-spec grammar
//! (`path:7`, `cbip:2,3`, `join(cycle:5,complete:2)`, `du(...)`).

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    /// `K_{p,q}` with `p <= q`; part A is `0..p`, part B is `p..p+q`.
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    /// `K_{1,q}` with center 0.
    Star(usize),
    /// `P_r ∘ K_1`: spine `0..r`, leaf `i + r` pendant on spine vertex `i`.
    Comb(usize),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    DisjointUnion(Box<FamilySpec>, Box<FamilySpec>),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamilyParams(msg.into())
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) | FamilySpec::Empty(n) => *n,
            FamilySpec::CompleteBipartite(p, q) => p + q,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
            FamilySpec::Star(q) => q + 1,
            FamilySpec::Comb(r) => 2 * r,
            FamilySpec::Join(a, b) | FamilySpec::DisjointUnion(a, b) => a.order() + b.order(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Empty(n) if *n == 0 => {
                Err(invalid(format!("{self}: order must be at least 1")))
            }
            FamilySpec::Cycle(n) if *n < 3 => Err(invalid(format!("{self}: cycle needs n >= 3"))),
            FamilySpec::CompleteBipartite(p, q) if !(1 <= *p && p <= q) => {
                Err(invalid(format!("{self}: need 1 <= p <= q")))
            }
            FamilySpec::CompleteMultipartite(parts) if parts.is_empty() || parts.contains(&0) => {
                Err(invalid(format!("{self}: parts must be nonempty")))
            }
            FamilySpec::Star(q) if *q == 0 => Err(invalid(format!("{self}: star needs q >= 1"))),
            FamilySpec::Comb(r) if *r == 0 => Err(invalid(format!("{self}: comb needs r >= 1"))),
            _ if self.order() > MAX_ORDER => Err(Error::OrderOutOfRange {
                n: self.order(),
                max: MAX_ORDER,
            }),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        match self {
            FamilySpec::Path(n) => {
                let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                Graph::build(*n, &edges)
            }
            FamilySpec::Cycle(n) => {
                let mut edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                edges.push((n - 1, 0));
                Graph::build(*n, &edges)
            }
            FamilySpec::Complete(n) => {
                FamilySpec::CompleteMultipartite(vec![1; *n]).build()
            }
            FamilySpec::Empty(n) => Graph::empty(*n),
            FamilySpec::CompleteBipartite(p, q) => {
                FamilySpec::CompleteMultipartite(vec![*p, *q]).build()
            }
            FamilySpec::CompleteMultipartite(parts) => {
                let mut g = Graph::empty(parts[0])?;
                for &k in &parts[1..] {
                    g = Graph::join(&g, &Graph::empty(k)?)?;
                }
                Ok(g)
            }
            FamilySpec::Star(q) => FamilySpec::CompleteBipartite(1, *q).build(),
            FamilySpec::Comb(r) => {
                let mut edges: Vec<_> = (1..*r).map(|i| (i - 1, i)).collect();
                edges.extend((0..*r).map(|i| (i, i + r)));
                Graph::build(2 * r, &edges)
            }
            FamilySpec::Join(a, b) => Graph::join(&a.build()?, &b.build()?),
            FamilySpec::DisjointUnion(a, b) => Graph::disjoint_union(&a.build()?, &b.build()?),
        }
    }

    /// Parse the family-spec grammar.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let text = text.trim();
        if let Some(rest) = strip_call(text, "join") {
            return fold_args(rest, |a, b| FamilySpec::Join(Box::new(a), Box::new(b)));
        }
        if let Some(rest) = strip_call(text, "du") {
            return fold_args(rest, |a, b| FamilySpec::DisjointUnion(Box::new(a), Box::new(b)));
        }
        let (kind, params) = text
            .split_once(':')
            .ok_or_else(|| invalid(format!("`{text}`: expected kind:params")))?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| invalid(format!("`{text}`: bad integer `{s}`")))
            })
            .collect::<Result<_>>()?;
        let one = |nums: &[usize]| -> Result<usize> {
            match nums {
                [n] => Ok(*n),
                _ => Err(invalid(format!("`{text}`: expected one parameter"))),
            }
        };
        let spec = match kind.trim() {
            "path" => FamilySpec::Path(one(&nums)?),
            "cycle" => FamilySpec::Cycle(one(&nums)?),
            "complete" => FamilySpec::Complete(one(&nums)?),
            "empty" => FamilySpec::Empty(one(&nums)?),
            "comb" => FamilySpec::Comb(one(&nums)?),
            "cbip" => match nums[..] {
                [p, q] => FamilySpec::CompleteBipartite(p, q),
                _ => return Err(invalid(format!("`{text}`: cbip takes p,q"))),
            },
            "star" => match nums[..] {
                [q] | [1, q] => FamilySpec::Star(q),
                _ => return Err(invalid(format!("`{text}`: star takes q or 1,q"))),
            },
            "multi" => FamilySpec::CompleteMultipartite(nums),
            other => return Err(invalid(format!("unknown family kind `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn strip_call<'a>(text: &'a str, name: &str) -> Option<&'a str> {
    text.strip_prefix(name)?
        .trim_start()
        .strip_prefix('(')?
        .strip_suffix(')')
}

/// Split on top-level commas; bare integers continue the previous argument,
/// so `cbip:2,3,path:4` yields `cbip:2,3` and `path:4`.
fn split_args(text: &str) -> Vec<String> {
    let mut pieces = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => pieces.push(std::mem::take(&mut cur)),
            _ => cur.push(c),
        }
    }
    pieces.push(cur);

    let mut args: Vec<String> = Vec::new();
    for p in pieces {
        let t = p.trim();
        match args.last_mut() {
            Some(last) if t.parse::<usize>().is_ok() => {
                last.push(',');
                last.push_str(t);
            }
            _ => args.push(t.to_string()),
        }
    }
    args
}

fn fold_args(inner: &str, op: impl Fn(FamilySpec, FamilySpec) -> FamilySpec) -> Result<FamilySpec> {
    let args = split_args(inner);
    if args.len() < 2 {
        return Err(invalid(format!("`{inner}`: composition needs at least two arguments")));
    }
    let mut specs = args.iter().map(|a| FamilySpec::parse(a));
    let mut acc = specs.next().expect("nonempty")?;
    for s in specs {
        acc = op(acc, s?);
    }
    acc.validate()?;
    Ok(acc)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::CompleteBipartite(p, q) => write!(f, "cbip:{p},{q}"),
            FamilySpec::CompleteMultipartite(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "multi:{}", s.join(","))
            }
            FamilySpec::Star(q) => write!(f, "star:1,{q}"),
            FamilySpec::Comb(r) => write!(f, "comb:{r}"),
            FamilySpec::Join(a, b) => write!(f, "join({a},{b})"),
            FamilySpec::DisjointUnion(a, b) => write!(f, "du({a},{b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_and_bipartite() {
        let c4 = FamilySpec::Cycle(4).build().unwrap();
        assert_eq!(c4.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        let k23 = FamilySpec::CompleteBipartite(2, 3).build().unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert!(!k23.adjacent(0, 1));
        assert!(k23.adjacent(1, 4));
    }

    #[test]
    fn comb_labeling() {
        let comb = FamilySpec::Comb(2).build().unwrap();
        assert_eq!(comb.order(), 4);
        assert_eq!(comb.edges(), vec![(0, 1), (0, 2), (1, 3)]);
    }

    #[test]
    fn edge_count_closed_forms() {
        for n in 1..12 {
            assert_eq!(FamilySpec::Path(n).build().unwrap().edge_count(), n - 1);
            assert_eq!(FamilySpec::Complete(n).build().unwrap().edge_count(), n * (n - 1) / 2);
            if n >= 3 {
                assert_eq!(FamilySpec::Cycle(n).build().unwrap().edge_count(), n);
            }
        }
        for p in 1..5 {
            for q in p..7 {
                let g = FamilySpec::CompleteBipartite(p, q).build().unwrap();
                assert_eq!(g.edge_count(), p * q);
            }
        }
    }

    #[test]
    fn invalid_params() {
        for bad in [
            FamilySpec::Cycle(2),
            FamilySpec::CompleteBipartite(3, 2),
            FamilySpec::CompleteBipartite(0, 2),
            FamilySpec::Path(0),
            FamilySpec::Comb(0),
            FamilySpec::CompleteMultipartite(vec![]),
        ] {
            assert!(matches!(bad.build(), Err(Error::InvalidFamilyParams(_))), "{bad}");
        }
        assert!(matches!(
            FamilySpec::Complete(65).build(),
            Err(Error::OrderOutOfRange { .. })
        ));
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(FamilySpec::parse("path:7").unwrap(), FamilySpec::Path(7));
        assert_eq!(FamilySpec::parse("star:1,3").unwrap(), FamilySpec::Star(3));
        assert_eq!(FamilySpec::parse("cbip:2,3").unwrap(), FamilySpec::CompleteBipartite(2, 3));
        let j = FamilySpec::parse("join(cycle:4, complete:2)").unwrap();
        assert_eq!(j.build().unwrap().edge_count(), 13);
        let nested = FamilySpec::parse("du(cbip:2,3,join(empty:1,path:3),complete:2)").unwrap();
        assert_eq!(nested.order(), 5 + 4 + 2);
        assert_eq!(FamilySpec::parse(&nested.to_string()).unwrap(), nested);
        assert!(FamilySpec::parse("cycle:2").is_err());
        assert!(FamilySpec::parse("blob:3").is_err());
        assert!(FamilySpec::parse("join(path:3)").is_err());
        assert!(FamilySpec::parse("path").is_err());
    }
}
