//! 3-CNF formulas, DIMACS text, and brute-force SAT / NAE-SAT oracles.

use std::fmt;

use crate::error::{Error, Result};

/// Largest variable count the brute-force oracles accept.
pub const BRUTEFORCE_MAX_VARS: usize = 24;

/// A literal over a 0-based variable index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Self { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Self { var, positive: false }
    }

    /// DIMACS form: 1-based, negative for negated literals.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn eval(self, a: &Assignment) -> bool {
        a.values[self.var] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var + 1)
        } else {
            write!(f, "~x{}", self.var + 1)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    n: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(n: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for c in &clauses {
            for l in c {
                if l.var >= n {
                    return Err(Error::pre(format!(
                        "literal {} out of range for {} variables",
                        l, n
                    )));
                }
            }
        }
        Ok(Self { n, clauses })
    }

    /// From DIMACS-style triples, e.g. `[[1, -2, 2]]`.
    pub fn from_dimacs_triples(n: usize, triples: &[[i64; 3]]) -> Result<Self> {
        let clauses = triples
            .iter()
            .map(|t| {
                let mut c = [Literal::pos(0); 3];
                for (slot, &x) in c.iter_mut().zip(t) {
                    if x == 0 {
                        return Err(Error::pre("literal 0 is not allowed"));
                    }
                    *slot = Literal { var: x.unsigned_abs() as usize - 1, positive: x > 0 };
                }
                Ok(c)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, clauses)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn satisfied_by(&self, a: &Assignment) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.eval(a)))
    }

    pub fn nae_satisfied_by(&self, a: &Assignment) -> bool {
        self.clauses.iter().all(|c| {
            let t = c.iter().filter(|l| l.eval(a)).count();
            t > 0 && t < 3
        })
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.clauses.iter().map(|c| format!("({} | {} | {})", c[0], c[1], c[2])).collect();
        write!(f, "{}", parts.join(" & "))
    }
}

/// Total truth assignment; `values[j]` is the value of variable j.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    pub values: Vec<bool>,
}

impl Assignment {
    /// Variable j is bit j of `bits`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        Self { values: (0..n).map(|j| (bits >> j) & 1 == 1).collect() }
    }

    pub fn complement(&self) -> Self {
        Self { values: self.values.iter().map(|b| !b).collect() }
    }
}

fn check_size(phi: &CnfFormula) -> Result<()> {
    if phi.n > BRUTEFORCE_MAX_VARS {
        return Err(Error::BudgetExceeded {
            what: "variable count",
            actual: phi.n,
            limit: BRUTEFORCE_MAX_VARS,
        });
    }
    Ok(())
}

fn first_in_binary_order(phi: &CnfFormula, ok: impl Fn(&Assignment) -> bool) -> Option<Assignment> {
    (0..1u64 << phi.n).map(|b| Assignment::from_bits(phi.n, b)).find(|a| ok(a))
}

/// Least satisfying assignment in binary order.
pub fn sat_bruteforce(phi: &CnfFormula) -> Result<Option<Assignment>> {
    check_size(phi)?;
    Ok(first_in_binary_order(phi, |a| phi.satisfied_by(a)))
}

/// Least assignment giving every clause a true and a false literal.
pub fn nae_sat_bruteforce(phi: &CnfFormula) -> Result<Option<Assignment>> {
    check_size(phi)?;
    Ok(first_in_binary_order(phi, |a| phi.nae_satisfied_by(a)))
}

/// Parses DIMACS CNF with exactly three literals per clause. Clauses may
/// span lines; `c` lines are comments.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if header.is_some() {
                return Err(Error::parse(line_no, "duplicate header"));
            }
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(Error::parse(line_no, "expected 'p cnf <vars> <clauses>'"));
            }
            let n = parts[2].parse().map_err(|_| Error::parse(line_no, "bad variable count"))?;
            let m = parts[3].parse().map_err(|_| Error::parse(line_no, "bad clause count"))?;
            header = Some((n, m));
            continue;
        }
        let (n, _) = header.ok_or_else(|| Error::parse(line_no, "clause before header"))?;
        for tok in line.split_whitespace() {
            let x: i64 =
                tok.parse().map_err(|_| Error::parse(line_no, format!("bad literal '{tok}'")))?;
            if x == 0 {
                if current.len() != 3 {
                    return Err(Error::parse(
                        line_no,
                        format!("clause has {} literals, expected 3", current.len()),
                    ));
                }
                clauses.push([current[0], current[1], current[2]]);
                current.clear();
            } else {
                if x.unsigned_abs() as usize > n {
                    return Err(Error::parse(line_no, format!("literal {x} out of range")));
                }
                current.push(x);
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(last_line.max(1), "missing header"))?;
    if !current.is_empty() {
        return Err(Error::parse(last_line, "unterminated clause"));
    }
    if clauses.len() != m {
        return Err(Error::parse(
            last_line,
            format!("header declares {m} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::from_dimacs_triples(n, &clauses)
}

pub fn emit_dimacs(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.n, phi.m());
    for c in &phi.clauses {
        out.push_str(&format!(
            "{} {} {} 0\n",
            c[0].to_dimacs(),
            c[1].to_dimacs(),
            c[2].to_dimacs()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: usize, t: &[[i64; 3]]) -> CnfFormula {
        CnfFormula::from_dimacs_triples(n, t).unwrap()
    }

    #[test]
    fn sat_examples() {
        assert_eq!(sat_bruteforce(&f(1, &[[1, 1, 1]])).unwrap().unwrap().values, vec![true]);
        assert_eq!(sat_bruteforce(&f(1, &[[1, 1, 1], [-1, -1, -1]])).unwrap(), None);
    }

    #[test]
    fn nae_examples() {
        let a = nae_sat_bruteforce(&f(2, &[[1, 2, 2]])).unwrap().unwrap();
        assert_eq!(a.values, vec![true, false]);
        assert_eq!(nae_sat_bruteforce(&f(1, &[[1, 1, 1]])).unwrap(), None);
        let phi = f(2, &[[1, 2, 2]]);
        assert!(phi.nae_satisfied_by(&a.complement()));
    }

    #[test]
    fn oracle_refuses_large() {
        let phi = f(25, &[[1, 2, 25]]);
        assert!(matches!(sat_bruteforce(&phi), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn dimacs_round_trip() {
        let phi = parse_dimacs("c demo\np cnf 2 1\n1 -2 2 0\n").unwrap();
        assert_eq!(phi.n(), 2);
        assert_eq!(phi.clauses()[0], [Literal::pos(0), Literal::neg(1), Literal::pos(1)]);
        assert_eq!(parse_dimacs(&emit_dimacs(&phi)).unwrap(), phi);
    }

    #[test]
    fn dimacs_errors() {
        assert!(matches!(parse_dimacs("1 2 3 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 2 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 3 2 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_dimacs("p graph 2 1\n").is_err());
    }
}
