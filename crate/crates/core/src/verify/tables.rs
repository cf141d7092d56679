//! Closed forms for `(xir, X, upper X, XIR)` on paths, cycles, complete
//! bipartite graphs, complete graphs and empty graphs, as printed.

use rayon::prelude::*;

use super::{Checker, SuiteResult};
use crate::closure::ClosureRule;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::irredundance::report;
use crate::Budget;

use ClosureRule::{Psd, Skew, Standard, VertexCover};

/// Largest order accepted by [`verify_family_tables`].
pub const MAX_TABLE_ORDER: usize = 12;

/// The `K_{p,q}` sizes in the table check.
pub const BIPARTITE_SIZES: [(usize, usize); 7] = [(1, 2), (1, 5), (2, 2), (2, 3), (3, 4), (4, 5), (5, 6)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub name: String,
    pub spec: FamilySpec,
    pub parameter: ClosureRule,
    /// `(xir, X, upper X, XIR)`.
    pub expected: [usize; 4],
}

fn all(v: usize) -> [usize; 4] {
    [v; 4]
}

fn path_row(n: usize, rule: ClosureRule) -> Option<[usize; 4]> {
    Some(match rule {
        Standard if n >= 5 => [1, 1, 2, (n - 1) / 2],
        Standard => return None,
        Psd => all(1),
        Skew => all(n % 2),
        _ => {
            let upper = (2 * n - 1).div_ceil(3);
            [n / 2, n / 2, upper, upper]
        }
    })
}

fn cycle_row(n: usize, rule: ClosureRule) -> [usize; 4] {
    match rule {
        Standard => [2, 2, 2, n / 2],
        Psd => all(2),
        Skew => all(2 - n % 2),
        _ => {
            let (lower, upper) = (n.div_ceil(2), (2 * n - 2).div_ceil(3));
            [lower, lower, upper, upper]
        }
    }
}

fn bipartite_row(p: usize, q: usize, rule: ClosureRule) -> [usize; 4] {
    match rule {
        Standard => [p, q + p - 2, q + p - 2, q + p - 2],
        Psd if p == 1 => all(1),
        Psd => [p, p, q, q.max(q + p - 4)],
        Skew => all(q + p - 2),
        _ if p == 1 => [1, 1, q, q],
        _ => [p, p, q, q + p - 2],
    }
}

/// Every row with a graph of order at most `max_n`: paths and cycles from
/// order 4, complete and empty graphs from order 2, and the listed
/// `K_{p,q}`. The standard-forcing path row starts at order 5.
pub fn table_rows(max_n: usize) -> Vec<TableRow> {
    let rules = [Standard, Psd, Skew, VertexCover];
    let mut rows = Vec::new();
    let mut push = |name: String, spec: FamilySpec, parameter, expected| {
        rows.push(TableRow {
            name,
            spec,
            parameter,
            expected,
        })
    };
    for n in 4..=max_n {
        for rule in rules {
            if let Some(e) = path_row(n, rule) {
                push(format!("P_{n}"), FamilySpec::Path(n), rule, e);
            }
        }
        for rule in rules {
            push(format!("C_{n}"), FamilySpec::Cycle(n), rule, cycle_row(n, rule));
        }
    }
    for (p, q) in BIPARTITE_SIZES.into_iter().filter(|(p, q)| p + q <= max_n) {
        for rule in rules {
            push(
                format!("K_{p},{q}"),
                FamilySpec::CompleteBipartite(p, q),
                rule,
                bipartite_row(p, q, rule),
            );
        }
    }
    for n in 2..=max_n {
        for rule in rules {
            let e = if rule == Skew { all(n - 2) } else { all(n - 1) };
            push(format!("K_{n}"), FamilySpec::Complete(n), rule, e);
        }
        for rule in rules {
            let e = if rule == VertexCover { all(0) } else { all(n) };
            push(format!("empty_{n}"), FamilySpec::Empty(n), rule, e);
        }
    }
    rows
}

/// Compares every row of [`table_rows`] with the computed values.
pub fn verify_family_tables(max_n: usize) -> Result<SuiteResult> {
    if max_n > MAX_TABLE_ORDER {
        return Err(Error::OrderBudgetExceeded {
            n: max_n,
            budget: MAX_TABLE_ORDER,
        });
    }
    let budget = Budget::new(MAX_TABLE_ORDER);
    let checkers: Vec<Checker> = table_rows(max_n)
        .par_iter()
        .map(|row| {
            let g = row.spec.build().expect("table graphs are valid");
            let mut c = Checker::for_graph(&g);
            let property = format!("table/{}/{}", row.name, row.parameter);
            if let Some(r) = c.ok(&property, report(&g, row.parameter, budget)) {
                let got = r.values();
                c.check(got == row.expected, &property, || {
                    format!("computed {got:?}, closed form {:?}", row.expected)
                });
            }
            c
        })
        .collect();
    Ok(SuiteResult::from_checkers("tables", max_n, checkers))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        let rows = table_rows(11);
        let find = |name: &str, p| rows.iter().find(|r| r.name == name && r.parameter == p).unwrap().expected;
        assert_eq!(find("P_7", Skew), [1, 1, 1, 1]);
        assert_eq!(find("C_7", VertexCover), [4, 4, 4, 4]);
        assert_eq!(find("K_2,3", Psd), [2, 2, 3, 3]);
        assert!(rows.iter().all(|r| r.name != "P_4" || r.parameter != Standard));
        assert!(rows.iter().any(|r| r.name == "K_5,6"));
        assert!(table_rows(10).iter().all(|r| r.name != "K_5,6"));
    }

    #[test]
    fn guard() {
        assert!(matches!(verify_family_tables(13), Err(Error::OrderBudgetExceeded { .. })));
    }

    #[test]
    fn only_path_cover_rows_disagree() {
        let r = verify_family_tables(8).unwrap();
        let names: Vec<&str> = r.failures.iter().map(|f| f.property.as_str()).collect();
        assert_eq!(names, ["table/P_4/vertex_cover", "table/P_7/vertex_cover"]);
        assert!(r.failures.iter().all(|f| f.detail.contains("closed form")));
    }
}
