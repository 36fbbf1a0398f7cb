//! Terms over the bialgebra generators, their concrete syntax and their
//! evaluation into decorated monoid homomorphisms.
//!
//! Syntax: `.` is composition (the right operand runs first), `*` is the
//! tensor product and binds tighter than `.`. Leaves are `mu`, `eta`,
//! `delta`, `eps`, `id`, `swap` and permutations `P(1 4 3)(5 6)`; the degree
//! of a permutation leaf is its largest symbol, so `P(1 2)(3)` lives in `Σ_3`.
//! `P()` is the empty permutation.

use std::fmt;

use crate::error::{Error, Result};
use crate::fgfmon::{compose_hat, tensor_hat, HatArrow, NormalForm};
use crate::perm::{cycle_symbols, parse_cycles, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Mu,
    Eta,
    Delta,
    Eps,
    Id,
    Swap,
    Perm(Permutation),
    /// `Compose(outer, inner)` is `outer . inner`.
    Compose(Box<Term>, Box<Term>),
    Tensor(Box<Term>, Box<Term>),
}

impl Term {
    pub fn compose(outer: Term, inner: Term) -> Term {
        Term::Compose(Box::new(outer), Box::new(inner))
    }

    pub fn tensor(left: Term, right: Term) -> Term {
        Term::Tensor(Box::new(left), Box::new(right))
    }

    /// Left-nested tensor of all terms; the empty product is `P()`.
    pub fn tensor_all(terms: impl IntoIterator<Item = Term>) -> Term {
        terms
            .into_iter()
            .reduce(Term::tensor)
            .unwrap_or_else(|| Term::Perm(Permutation::identity(0)))
    }

    /// `id * id * ... * id`, or `P()` for `n = 0`.
    pub fn ids(n: usize) -> Term {
        Term::tensor_all(std::iter::repeat_n(Term::Id, n))
    }

    /// Reads a term and checks its arity.
    pub fn parse(text: &str) -> Result<Term> {
        let t = Term::parse_unchecked(text)?;
        t.arity()?;
        Ok(t)
    }

    /// Reads a term without checking that compositions are well typed.
    pub fn parse_unchecked(text: &str) -> Result<Term> {
        let mut p = Parser {
            src: text,
            pos: 0,
            depth: 0,
            nodes: 0,
        };
        let t = p.seq()?;
        p.skip_ws();
        if p.pos < text.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(t)
    }

    /// `(inputs, outputs)`.
    pub fn arity(&self) -> Result<(usize, usize)> {
        self.arity_at("$")
    }

    fn arity_at(&self, path: &str) -> Result<(usize, usize)> {
        Ok(match self {
            Term::Mu => (2, 1),
            Term::Eta => (0, 1),
            Term::Delta => (1, 2),
            Term::Eps => (1, 0),
            Term::Id => (1, 1),
            Term::Swap => (2, 2),
            Term::Perm(s) => (s.degree(), s.degree()),
            Term::Compose(outer, inner) => {
                let (n2, m2) = outer.arity_at(&format!("{path}.0"))?;
                let (n1, m1) = inner.arity_at(&format!("{path}.1"))?;
                if m1 != n2 {
                    return Err(Error::Arity {
                        path: path.to_string(),
                        msg: format!(
                            "inner term has {m1} outputs but outer term takes {n2} inputs"
                        ),
                    });
                }
                (n1, m2)
            }
            Term::Tensor(l, r) => {
                let (n1, m1) = l.arity_at(&format!("{path}.0"))?;
                let (n2, m2) = r.arity_at(&format!("{path}.1"))?;
                (n1 + n2, m1 + m2)
            }
        })
    }

    /// Number of generator leaves (`mu`, `eta`, `delta`, `eps`).
    pub fn generators(&self) -> usize {
        match self {
            Term::Mu | Term::Eta | Term::Delta | Term::Eps => 1,
            Term::Id | Term::Swap | Term::Perm(_) => 0,
            Term::Compose(a, b) | Term::Tensor(a, b) => a.generators() + b.generators(),
        }
    }

    /// `μ^{[0]} = η`, `μ^{[1]} = id`, `μ^{[k]} = μ . (μ^{[k-1]} * id)`.
    pub fn iter_mu(k: usize) -> Term {
        match k {
            0 => Term::Eta,
            1 => Term::Id,
            _ => Term::compose(Term::Mu, Term::tensor(Term::iter_mu(k - 1), Term::Id)),
        }
    }

    /// `Δ^{[0]} = ε`, `Δ^{[1]} = id`, `Δ^{[k]} = (Δ^{[k-1]} * id) . Δ`.
    pub fn iter_delta(k: usize) -> Term {
        match k {
            0 => Term::Eps,
            1 => Term::Id,
            _ => Term::compose(Term::tensor(Term::iter_delta(k - 1), Term::Id), Term::Delta),
        }
    }

    /// `P_σ` as a composite of layers `id^{i-1} * swap * id^{n-i-1}`.
    pub fn perm_term(sigma: &Permutation) -> Term {
        let n = sigma.degree();
        if n == 0 {
            return Term::compose(Term::Eps, Term::Eta);
        }
        // σ = s_{i_1} ∘ ... ∘ s_{i_r} and P_{a∘b} = P_b ∘ P_a, so s_{i_1} runs first.
        sigma
            .adjacent_transpositions()
            .into_iter()
            .map(|i| transposition_layer(n, i))
            .reduce(|inner, outer| Term::compose(outer, inner))
            .unwrap_or_else(|| Term::ids(n))
    }

    /// `μ^{[q]} . P_σ . Δ^{[p]}`.
    pub fn from_normal_form(nf: &NormalForm) -> Term {
        let mus = Term::tensor_all(nf.q.iter().map(|&k| Term::iter_mu(k)));
        let deltas = Term::tensor_all(nf.p.iter().map(|&k| Term::iter_delta(k)));
        Term::compose(Term::compose(mus, Term::Perm(nf.sigma.clone())), deltas)
    }

    /// The decorated homomorphism denoted by the term.
    pub fn eval(&self) -> Result<HatArrow> {
        self.arity()?;
        self.eval_checked()
    }

    fn eval_checked(&self) -> Result<HatArrow> {
        Ok(match self {
            Term::Mu => HatArrow::mu(),
            Term::Eta => HatArrow::eta(),
            Term::Delta => HatArrow::delta(),
            Term::Eps => HatArrow::eps(),
            Term::Id => HatArrow::identity(1),
            Term::Swap => HatArrow::perm(&Permutation::adjacent(2, 1)),
            Term::Perm(s) => HatArrow::perm(s),
            Term::Compose(outer, inner) => {
                compose_hat(&outer.eval_checked()?, &inner.eval_checked()?)?
            }
            Term::Tensor(l, r) => tensor_hat(&l.eval_checked()?, &r.eval_checked()?),
        })
    }
}

fn transposition_layer(n: usize, i: usize) -> Term {
    let mut parts = Vec::new();
    parts.extend(std::iter::repeat_n(Term::Id, i - 1));
    parts.push(Term::Swap);
    parts.extend(std::iter::repeat_n(Term::Id, n - i - 1));
    Term::tensor_all(parts)
}

/// One defining equation of a bialgebra, as a pair of terms in concrete syntax.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Axiom {
    pub name: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

/// The bialgebra equations. Both unit laws, both counit laws and the four
/// compatibility laws are listed separately. `P()` is the empty diagram.
pub const AXIOMS: [Axiom; 10] = [
    Axiom { name: "associativity", lhs: "mu . (mu * id)", rhs: "mu . (id * mu)" },
    Axiom { name: "left unit", lhs: "mu . (eta * id)", rhs: "id" },
    Axiom { name: "right unit", lhs: "mu . (id * eta)", rhs: "id" },
    Axiom { name: "coassociativity", lhs: "(delta * id) . delta", rhs: "(id * delta) . delta" },
    Axiom { name: "left counit", lhs: "(eps * id) . delta", rhs: "id" },
    Axiom { name: "right counit", lhs: "(id * eps) . delta", rhs: "id" },
    Axiom {
        name: "delta-mu",
        lhs: "delta . mu",
        rhs: "(mu * mu) . (id * swap * id) . (delta * delta)",
    },
    Axiom { name: "delta-eta", lhs: "delta . eta", rhs: "eta * eta" },
    Axiom { name: "eps-mu", lhs: "eps . mu", rhs: "eps * eps" },
    Axiom { name: "eps-eta", lhs: "eps . eta", rhs: "P()" },
];

/// `eval_T`: the decorated homomorphism denoted by `t`.
pub fn eval_t(t: &Term) -> Result<HatArrow> {
    t.eval()
}

const MAX_DEPTH: usize = 256;
const MAX_NODES: usize = 8192;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    depth: usize,
    nodes: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
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

    fn seq(&mut self) -> Result<Term> {
        let mut t = self.ten()?;
        while self.eat('.') {
            let rhs = self.ten()?;
            t = Term::compose(t, rhs);
        }
        Ok(t)
    }

    fn ten(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while self.eat('*') {
            let rhs = self.atom()?;
            t = Term::tensor(t, rhs);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term> {
        self.skip_ws();
        self.nodes += 1;
        if self.nodes > MAX_NODES {
            return Err(self.error("term too large"));
        }
        if self.eat('(') {
            self.depth += 1;
            if self.depth > MAX_DEPTH {
                return Err(self.error("nesting too deep"));
            }
            let t = self.seq()?;
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            self.depth -= 1;
            return Ok(t);
        }
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphanumeric() && c != '_')
            .unwrap_or(self.rest().len());
        let word = &self.src[start..start + len];
        self.pos += len;
        match word {
            "mu" => Ok(Term::Mu),
            "eta" => Ok(Term::Eta),
            "delta" => Ok(Term::Delta),
            "eps" => Ok(Term::Eps),
            "id" => Ok(Term::Id),
            "swap" => Ok(Term::Swap),
            "P" => self.perm_leaf(),
            "" => {
                self.pos = start;
                Err(self.error("expected a term"))
            }
            other => {
                self.pos = start;
                Err(self.error(format!("unknown token {other:?}")))
            }
        }
    }

    fn perm_leaf(&mut self) -> Result<Term> {
        let start = self.pos;
        let mut cycles = Vec::new();
        loop {
            let save = self.pos;
            self.skip_ws();
            if !self.rest().starts_with('(') {
                self.pos = save;
                break;
            }
            let body_start = self.pos + 1;
            let Some(close) = self.src[body_start..].find(')') else {
                return Err(self.error("unclosed permutation cycle"));
            };
            let body = &self.src[body_start..body_start + close];
            if !body
                .chars()
                .all(|c| c.is_ascii_digit() || c.is_whitespace() || c == ',')
            {
                if cycles.is_empty() {
                    return Err(self.error("expected cycle symbols after 'P'"));
                }
                // a parenthesised term follows; it is not part of this leaf
                self.pos = save;
                break;
            }
            let symbols = cycle_symbols(body).map_err(|m| self.error(m))?;
            cycles.push(symbols);
            self.pos = body_start + close + 1;
        }
        if cycles.is_empty() {
            return Err(self.error("expected '(' after 'P'"));
        }
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0);
        if degree > 4096 {
            return Err(Error::Parse {
                pos: start,
                msg: format!("permutation degree {degree} too large"),
            });
        }
        let text: String = cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|s| s.to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect();
        let sigma = parse_cycles(&text, degree).map_err(|e| Error::Parse {
            pos: start,
            msg: e.to_string(),
        })?;
        Ok(Term::Perm(sigma))
    }
}

fn format_perm_leaf(sigma: &Permutation) -> String {
    let n = sigma.degree();
    let mut cycles = sigma.cycles();
    if n > 0 && sigma.apply(n) == n {
        cycles.push(vec![n]);
    }
    let body: String = cycles
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|s| s.to_string()).collect();
            format!("({})", inner.join(" "))
        })
        .collect();
    if body.is_empty() {
        "P()".to_string()
    } else {
        format!("P{body}")
    }
}

#[derive(Clone, Copy, PartialEq, PartialOrd)]
enum Level {
    Seq,
    Ten,
    Atom,
}

fn write_term(t: &Term, level: Level, out: &mut String) {
    match t {
        Term::Mu => out.push_str("mu"),
        Term::Eta => out.push_str("eta"),
        Term::Delta => out.push_str("delta"),
        Term::Eps => out.push_str("eps"),
        Term::Id => out.push_str("id"),
        Term::Swap => out.push_str("swap"),
        Term::Perm(s) => out.push_str(&format_perm_leaf(s)),
        Term::Compose(_, _) => {
            let paren = level > Level::Seq;
            if paren {
                out.push('(');
            }
            write_compose_chain(t, out);
            if paren {
                out.push(')');
            }
        }
        Term::Tensor(a, b) => {
            let paren = level > Level::Ten;
            if paren {
                out.push('(');
            }
            write_term(a, Level::Ten, out);
            out.push_str(" * ");
            write_term(b, Level::Atom, out);
            if paren {
                out.push(')');
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        write_term(self, Level::Seq, &mut out);
        f.write_str(&out)
    }
}

// Operands of a composition other than nested compositions on the left are
// written as atoms, so tensors always get brackets.
fn write_compose_chain(t: &Term, out: &mut String) {
    match t {
        Term::Compose(a, b) => {
            write_compose_chain(a, out);
            out.push_str(" . ");
            write_term(b, Level::Atom, out);
        }
        other => write_term(other, Level::Atom, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(text: &str) -> Term {
        Term::parse(text).unwrap()
    }

    #[test]
    fn parse_and_arity() {
        assert_eq!(t("mu . (id * eta)").arity().unwrap(), (1, 1));
        let notation = t("(eps * id * eta * mu) . P(1 2 3 4) . (delta * delta)");
        assert_eq!(notation.arity().unwrap(), (2, 3));
        assert_eq!(t("mu . id * eta"), t("mu . (id * eta)"));
        assert_eq!(t("P(1234)"), t("P(1 2 3 4)"));
        assert_eq!(t("P(143)(56)").arity().unwrap(), (6, 6));
        assert_eq!(t("P(3)"), Term::Perm(Permutation::identity(3)));
        assert_eq!(t("P()").arity().unwrap(), (0, 0));
    }

    #[test]
    fn arity_errors_report_path() {
        match Term::parse("mu . mu") {
            Err(Error::Arity { path, .. }) => assert_eq!(path, "$"),
            other => panic!("unexpected {other:?}"),
        }
        match Term::parse("id * (mu . delta . mu . mu)") {
            Err(Error::Arity { path, .. }) => assert_eq!(path, "$.1"),
            other => panic!("unexpected {other:?}"),
        }
        // 2 -> 1 -> 2 -> 1 is well typed
        assert_eq!(t("mu . delta . mu").arity().unwrap(), (2, 1));
    }

    #[test]
    fn syntax_errors_report_position() {
        match Term::parse("mu . nu") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Term::parse("(mu").is_err());
        assert!(Term::parse("mu .").is_err());
        assert!(Term::parse("P(1 1)").is_err());
        assert!(Term::parse("P").is_err());
        assert!(Term::parse("mu mu").is_err());
    }

    #[test]
    fn printer_round_trips() {
        for text in [
            "mu . (id * eta)",
            "(eps * id * eta * mu) . P(1 2 3 4) . (delta * delta)",
            "(mu * mu) . (id * swap * id) . (delta * delta)",
            "id * (id * id)",
            "(mu . delta) * id",
            "mu . (delta . mu)",
            "P(1 2)(3)",
            "P()",
            "P(1 4 3)(5 6)",
        ] {
            let term = t(text);
            let printed = term.to_string();
            assert_eq!(Term::parse(&printed).unwrap(), term, "{text} -> {printed}");
        }
        assert_eq!(t("mu . id * eta").to_string(), "mu . (id * eta)");
        assert_eq!(t("P(1 2 3 4)").to_string(), "P(1 2 3 4)");
    }

    #[test]
    fn iterated_builders() {
        assert_eq!(Term::iter_mu(0), Term::Eta);
        assert_eq!(Term::iter_mu(1), Term::Id);
        assert_eq!(Term::iter_delta(1), Term::Id);
        assert_eq!(Term::iter_mu(3).to_string(), "mu . ((mu . (id * id)) * id)");
        assert_eq!(Term::iter_mu(3).arity().unwrap(), (3, 1));
        assert_eq!(Term::iter_delta(4).arity().unwrap(), (1, 4));
        assert_eq!(
            Term::iter_mu(3).eval().unwrap(),
            HatArrow::iter_mu(3)
        );
    }

    #[test]
    fn perm_term_examples() {
        let swap = Permutation::adjacent(2, 1);
        assert_eq!(Term::perm_term(&swap), Term::Swap);
        let got = Term::compose(Term::Mu, Term::perm_term(&swap)).eval().unwrap();
        assert_eq!(got.perms(), &[swap]);
        assert_eq!(Term::perm_term(&Permutation::identity(0)).to_string(), "eps . eta");
        let sigma = parse_cycles("(143)(56)", 6).unwrap();
        assert_eq!(
            Term::perm_term(&sigma).eval().unwrap(),
            Term::Perm(sigma).eval().unwrap()
        );
    }

    #[test]
    fn generator_images() {
        let delta = t("delta").eval().unwrap();
        assert_eq!(delta.hom().image(1).letters(), vec![1, 2]);
        assert!(delta.perms().iter().all(Permutation::is_identity));
        let got = t("mu . P(1 2)").eval().unwrap();
        assert_eq!(got.perms()[0].one_line(), vec![2, 1]);
        let nf = t("(eps * id * eta * mu) . P(1 2 3 4) . (delta * delta)")
            .eval()
            .unwrap()
            .normal_form();
        assert_eq!(nf.p, vec![1, 2]);
        assert_eq!(nf.q, vec![1, 0, 2]);
        assert_eq!(nf.sigma.one_line(), vec![2, 3, 1]);
    }

    #[test]
    fn axioms_hold_after_evaluation() {
        for ax in AXIOMS {
            let l = t(ax.lhs).eval().unwrap();
            let r = t(ax.rhs).eval().unwrap();
            assert_eq!(l, r, "{}", ax.name);
        }
    }

    #[test]
    fn normal_form_term_evaluates_back() {
        let nf = NormalForm::new(
            vec![3, 4],
            parse_cycles("(165732)", 7).unwrap(),
            vec![4, 3],
        )
        .unwrap();
        let term = Term::from_normal_form(&nf);
        assert_eq!(term.arity().unwrap(), (2, 2));
        assert_eq!(term.eval().unwrap().normal_form(), nf);
    }
}
