//! Normal forms of terms, computed three independent ways, and the equality
//! decision procedure built on them.
//!
//! * [`normalize_functorial`] evaluates the term as a decorated homomorphism
//!   and reads off its factorisation.
//! * [`normalize_rewrite`] runs the elementary reductions on a string diagram
//!   until it has the shape `μ^{[q]} ∘ P_σ ∘ Δ^{[p]}`.
//! * [`normalize_trace`] pushes symbolic Sweedler atoms through the term.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fgfmon::NormalForm;
use crate::perm::Permutation;
use crate::terms::Term;

pub fn normalize_functorial(t: &Term) -> Result<NormalForm> {
    Ok(t.eval()?.normal_form())
}

/// Order in which the rewrite engine picks among available reductions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Shallowest redex first, lowest node id on ties.
    LeftmostInnermost,
    /// Shallowest redex first, highest node id on ties.
    RightmostInnermost,
    /// Uniformly random redex from a seeded generator.
    Random(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RewriteOptions {
    pub strategy: Strategy,
    pub max_steps: usize,
}

impl Default for RewriteOptions {
    fn default() -> Self {
        RewriteOptions {
            strategy: Strategy::LeftmostInnermost,
            max_steps: 1_000_000,
        }
    }
}

pub fn normalize_rewrite(t: &Term) -> Result<NormalForm> {
    normalize_rewrite_with(t, &RewriteOptions::default())
}

pub fn normalize_rewrite_with(t: &Term, opts: &RewriteOptions) -> Result<NormalForm> {
    let mut g = Diagram::from_term(t)?;
    g.normalize(opts)?;
    g.extract()
}

/// Number of elementary reductions applied before the diagram was in normal form.
pub fn rewrite_steps(t: &Term, opts: &RewriteOptions) -> Result<usize> {
    let mut g = Diagram::from_term(t)?;
    g.normalize(opts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Src {
    In(usize),
    /// output port of a node
    Node(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Dst {
    Out(usize),
    /// input port of a node
    Node(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// `μ^{[k]}`: `k` inputs, one output
    Mul,
    /// `Δ^{[k]}`: one input, `k` outputs
    Comul,
}

#[derive(Debug, Clone)]
struct Node {
    kind: Kind,
    arity: usize,
    ins: Vec<Src>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    Unit,
    Counit,
    DeltaMu,
    DeltaEta,
    EpsMu,
    EpsEta,
}

/// A string diagram of iterated multiplications and comultiplications. Wire
/// crossings are not stored: a term's permutations only decide which port
/// each wire lands on.
struct Diagram {
    nodes: BTreeMap<usize, Node>,
    outs: Vec<Src>,
    next_id: usize,
    inputs: usize,
}

impl Diagram {
    fn from_term(t: &Term) -> Result<Diagram> {
        let (n, _) = t.arity()?;
        let mut g = Diagram {
            nodes: BTreeMap::new(),
            outs: Vec::new(),
            next_id: 0,
            inputs: n,
        };
        let ins: Vec<Src> = (0..n).map(Src::In).collect();
        g.outs = g.build(t, ins);
        Ok(g)
    }

    fn add(&mut self, kind: Kind, arity: usize, ins: Vec<Src>) -> usize {
        let id = self.next_id;
        self.next_id += 1;
        self.nodes.insert(id, Node { kind, arity, ins });
        id
    }

    fn build(&mut self, t: &Term, ins: Vec<Src>) -> Vec<Src> {
        match t {
            Term::Mu => vec![Src::Node(self.add(Kind::Mul, 2, ins), 0)],
            Term::Eta => vec![Src::Node(self.add(Kind::Mul, 0, vec![]), 0)],
            Term::Delta => {
                let id = self.add(Kind::Comul, 2, ins);
                vec![Src::Node(id, 0), Src::Node(id, 1)]
            }
            Term::Eps => {
                self.add(Kind::Comul, 0, ins);
                vec![]
            }
            Term::Id => ins,
            Term::Swap => vec![ins[1], ins[0]],
            Term::Perm(s) => s.zero_based().iter().map(|&i| ins[i]).collect(),
            Term::Compose(outer, inner) => {
                let mid = self.build(inner, ins);
                self.build(outer, mid)
            }
            Term::Tensor(l, r) => {
                let (nl, _) = l.arity().expect("checked by the caller");
                let mut ins = ins;
                let right = ins.split_off(nl);
                let mut out = self.build(l, ins);
                out.extend(self.build(r, right));
                out
            }
        }
    }

    fn consumers(&self) -> HashMap<Src, Dst> {
        let mut map = HashMap::new();
        for (&id, node) in &self.nodes {
            for (port, &s) in node.ins.iter().enumerate() {
                map.insert(s, Dst::Node(id, port));
            }
        }
        for (j, &s) in self.outs.iter().enumerate() {
            map.insert(s, Dst::Out(j));
        }
        map
    }

    fn connect(&mut self, dst: Dst, src: Src) {
        match dst {
            Dst::Out(j) => self.outs[j] = src,
            Dst::Node(id, port) => self.nodes.get_mut(&id).expect("live node").ins[port] = src,
        }
    }

    fn node(&self, src: Src) -> Option<(usize, &Node)> {
        match src {
            Src::Node(id, _) => Some((id, &self.nodes[&id])),
            Src::In(_) => None,
        }
    }

    /// Removes unary nodes and merges adjacent nodes of the same kind.
    fn cleanup(&mut self) {
        loop {
            let cons = self.consumers();
            if let Some((&id, node)) = self.nodes.iter().find(|(_, n)| n.arity == 1) {
                let src = node.ins[0];
                let dst = cons[&Src::Node(id, 0)];
                self.nodes.remove(&id);
                self.connect(dst, src);
                continue;
            }
            if let Some((outer, port, inner)) = self.mul_merge() {
                let inner_node = self.nodes.remove(&inner).expect("live node");
                let outer_node = self.nodes.get_mut(&outer).expect("live node");
                outer_node.ins.splice(port..=port, inner_node.ins);
                outer_node.arity = outer_node.ins.len();
                continue;
            }
            if let Some((outer, port, inner)) = self.comul_merge(&cons) {
                let inner_arity = self.nodes[&inner].arity;
                let outer_arity = self.nodes[&outer].arity;
                for p in (port + 1)..outer_arity {
                    self.connect(cons[&Src::Node(outer, p)], Src::Node(outer, p + inner_arity - 1));
                }
                for q in 0..inner_arity {
                    self.connect(cons[&Src::Node(inner, q)], Src::Node(outer, port + q));
                }
                self.nodes.remove(&inner);
                self.nodes.get_mut(&outer).expect("live node").arity = outer_arity + inner_arity - 1;
                continue;
            }
            break;
        }
    }

    /// A multiplication with at least two inputs feeding another multiplication.
    fn mul_merge(&self) -> Option<(usize, usize, usize)> {
        for (&id, node) in &self.nodes {
            if node.kind != Kind::Mul {
                continue;
            }
            for (port, &s) in node.ins.iter().enumerate() {
                if let Some((inner, n)) = self.node(s) {
                    if n.kind == Kind::Mul && n.arity >= 2 {
                        return Some((id, port, inner));
                    }
                }
            }
        }
        None
    }

    /// A comultiplication with at least two outputs fed by another comultiplication.
    fn comul_merge(&self, cons: &HashMap<Src, Dst>) -> Option<(usize, usize, usize)> {
        for (&id, node) in &self.nodes {
            if node.kind != Kind::Comul {
                continue;
            }
            for port in 0..node.arity {
                if let Dst::Node(inner, 0) = cons[&Src::Node(id, port)] {
                    let n = &self.nodes[&inner];
                    if n.kind == Kind::Comul && n.arity >= 2 {
                        return Some((id, port, inner));
                    }
                }
            }
        }
        None
    }

    fn redexes(&self) -> Vec<(Rule, usize, usize)> {
        let cons = self.consumers();
        let mut out = Vec::new();
        for (&id, node) in &self.nodes {
            match node.kind {
                Kind::Mul if node.arity >= 2 => {
                    for (port, &s) in node.ins.iter().enumerate() {
                        if let Some((_, n)) = self.node(s) {
                            if n.kind == Kind::Mul && n.arity == 0 {
                                out.push((Rule::Unit, id, port));
                            }
                        }
                    }
                }
                Kind::Comul => {
                    if node.arity >= 2 {
                        for port in 0..node.arity {
                            if let Dst::Node(c, _) = cons[&Src::Node(id, port)] {
                                let n = &self.nodes[&c];
                                if n.kind == Kind::Comul && n.arity == 0 {
                                    out.push((Rule::Counit, id, port));
                                }
                            }
                        }
                    }
                    if let Some((_, up)) = self.node(node.ins[0]) {
                        let rule = match (node.arity, up.arity) {
                            (0, 0) => Some(Rule::EpsEta),
                            (0, k) if k >= 2 => Some(Rule::EpsMu),
                            (j, 0) if j >= 2 => Some(Rule::DeltaEta),
                            (j, k) if j >= 2 && k >= 2 => Some(Rule::DeltaMu),
                            _ => None,
                        };
                        if let (Some(rule), Kind::Mul) = (rule, up.kind) {
                            out.push((rule, id, 0));
                        }
                    }
                }
                _ => {}
            }
        }
        out
    }

    fn depths(&self) -> HashMap<usize, usize> {
        fn depth(g: &Diagram, id: usize, memo: &mut HashMap<usize, usize>) -> usize {
            if let Some(&d) = memo.get(&id) {
                return d;
            }
            let d = 1 + g.nodes[&id]
                .ins
                .iter()
                .map(|&s| match s {
                    Src::In(_) => 0,
                    Src::Node(up, _) => depth(g, up, memo),
                })
                .max()
                .unwrap_or(0);
            memo.insert(id, d);
            d
        }
        let mut memo = HashMap::new();
        for &id in self.nodes.keys() {
            depth(self, id, &mut memo);
        }
        memo
    }

    fn apply(&mut self, rule: Rule, id: usize, port: usize) {
        let cons = self.consumers();
        match rule {
            Rule::Unit => {
                let node = self.nodes.get_mut(&id).expect("live node");
                let Src::Node(eta, _) = node.ins.remove(port) else {
                    unreachable!("unit redex is fed by a node")
                };
                node.arity -= 1;
                self.nodes.remove(&eta);
            }
            Rule::Counit => {
                let Dst::Node(eps, _) = cons[&Src::Node(id, port)] else {
                    unreachable!("counit redex feeds a node")
                };
                let arity = self.nodes[&id].arity;
                for p in (port + 1)..arity {
                    self.connect(cons[&Src::Node(id, p)], Src::Node(id, p - 1));
                }
                self.nodes.remove(&eps);
                self.nodes.get_mut(&id).expect("live node").arity -= 1;
            }
            Rule::DeltaMu => {
                let d = self.nodes.remove(&id).expect("live node");
                let Src::Node(m_id, _) = d.ins[0] else {
                    unreachable!("Δμ redex is fed by a node")
                };
                let m = self.nodes.remove(&m_id).expect("live node");
                let j = d.arity;
                let k = m.arity;
                let targets: Vec<Dst> = (0..j).map(|p| cons[&Src::Node(id, p)]).collect();
                // μ^{[k]}(u) = μ(μ^{[k-1]}(u_1..u_{k-1}), u_k), Δ^{[j]} = (Δ^{[j-1]} ⊗ Id) Δ
                let a = Src::Node(self.add(Kind::Mul, k - 1, m.ins[..k - 1].to_vec()), 0);
                let d1 = self.add(Kind::Comul, 2, vec![a]);
                let d2 = self.add(Kind::Comul, 2, vec![m.ins[k - 1]]);
                let m1 = self.add(Kind::Mul, 2, vec![Src::Node(d1, 0), Src::Node(d2, 0)]);
                let m2 = self.add(Kind::Mul, 2, vec![Src::Node(d1, 1), Src::Node(d2, 1)]);
                let rest = self.add(Kind::Comul, j - 1, vec![Src::Node(m1, 0)]);
                for (p, &dst) in targets[..j - 1].iter().enumerate() {
                    self.connect(dst, Src::Node(rest, p));
                }
                self.connect(targets[j - 1], Src::Node(m2, 0));
            }
            Rule::DeltaEta => {
                let j = self.nodes[&id].arity;
                let last = cons[&Src::Node(id, j - 1)];
                self.nodes.get_mut(&id).expect("live node").arity -= 1;
                let eta = self.add(Kind::Mul, 0, vec![]);
                self.connect(last, Src::Node(eta, 0));
            }
            Rule::EpsMu => {
                let Src::Node(m_id, _) = self.nodes[&id].ins[0] else {
                    unreachable!("εμ redex is fed by a node")
                };
                let m = self.nodes.remove(&m_id).expect("live node");
                let k = m.arity;
                let a = self.add(Kind::Mul, k - 1, m.ins[..k - 1].to_vec());
                self.connect(Dst::Node(id, 0), Src::Node(a, 0));
                self.add(Kind::Comul, 0, vec![m.ins[k - 1]]);
            }
            Rule::EpsEta => {
                let Src::Node(e, _) = self.nodes[&id].ins[0] else {
                    unreachable!("εη redex is fed by a node")
                };
                self.nodes.remove(&id);
                self.nodes.remove(&e);
            }
        }
    }

    fn normalize(&mut self, opts: &RewriteOptions) -> Result<usize> {
        let mut rng = match opts.strategy {
            Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        self.cleanup();
        let mut steps = 0;
        loop {
            let redexes = self.redexes();
            if redexes.is_empty() {
                return Ok(steps);
            }
            if steps >= opts.max_steps {
                return Err(Error::StepBudget {
                    steps,
                    state: self.to_string(),
                });
            }
            let (rule, id, port) = match (&mut rng, opts.strategy) {
                (Some(rng), _) => redexes[rng.gen_range(0..redexes.len())],
                (None, strategy) => {
                    let depths = self.depths();
                    *redexes
                        .iter()
                        .min_by(|a, b| {
                            let by_id = match strategy {
                                Strategy::RightmostInnermost => b.1.cmp(&a.1),
                                _ => a.1.cmp(&b.1),
                            };
                            depths[&a.1]
                                .cmp(&depths[&b.1])
                                .then(by_id)
                                .then(a.2.cmp(&b.2))
                        })
                        .expect("non-empty")
                }
            };
            self.apply(rule, id, port);
            self.cleanup();
            steps += 1;
        }
    }

    /// Reads `(p, σ, q)` off a diagram with no redexes left.
    fn extract(&self) -> Result<NormalForm> {
        let stuck = |why: &str| Error::Invariant(format!("diagram not in normal form ({why}): {self}"));
        let cons = self.consumers();
        // strand index of each source that starts a strand
        let mut strand: HashMap<Src, usize> = HashMap::new();
        let mut p = Vec::with_capacity(self.inputs);
        for i in 0..self.inputs {
            match cons.get(&Src::In(i)) {
                Some(&Dst::Node(c, _)) if self.nodes[&c].kind == Kind::Comul => {
                    let arity = self.nodes[&c].arity;
                    for r in 0..arity {
                        strand.insert(Src::Node(c, r), strand.len());
                    }
                    p.push(arity);
                }
                Some(_) => {
                    strand.insert(Src::In(i), strand.len());
                    p.push(1);
                }
                None => return Err(stuck("dangling input")),
            }
        }
        let mut images = Vec::new();
        let mut q = Vec::with_capacity(self.outs.len());
        for &s in &self.outs {
            let sources: Vec<Src> = match self.node(s) {
                Some((_, n)) if n.kind == Kind::Mul => n.ins.clone(),
                _ => vec![s],
            };
            q.push(sources.len());
            for src in sources {
                images.push(*strand.get(&src).ok_or_else(|| stuck("strand not from an input"))?);
            }
        }
        let sigma = Permutation::from_zero_based(images).map_err(|_| stuck("strands reused"))?;
        NormalForm::new(p, sigma, q)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let src = |s: &Src| match s {
            Src::In(i) => format!("in{}", i + 1),
            Src::Node(id, p) => format!("n{id}.{p}"),
        };
        write!(f, "{} inputs;", self.inputs)?;
        for (id, node) in &self.nodes {
            let name = match node.kind {
                Kind::Mul => "mu",
                Kind::Comul => "delta",
            };
            let ins: Vec<String> = node.ins.iter().map(src).collect();
            write!(f, " n{id}={name}^[{}]({})", node.arity, ins.join(","))?;
        }
        let outs: Vec<String> = self.outs.iter().map(src).collect();
        write!(f, "; outputs ({})", outs.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Atom {
    source: usize,
    /// `false` is the left copy of a comultiplication, `true` the right one.
    path: Vec<bool>,
}

type Wire = Vec<Atom>;

/// Symbolic evaluation on generic inputs `x_1, ..., x_n`.
pub fn normalize_trace(t: &Term) -> Result<NormalForm> {
    let (n, _) = t.arity()?;
    let inputs: Vec<Wire> = (0..n)
        .map(|i| {
            vec![Atom {
                source: i,
                path: Vec::new(),
            }]
        })
        .collect();
    let outputs = trace(t, inputs);

    let mut survivors: Vec<Vec<&Vec<bool>>> = vec![Vec::new(); n];
    for atom in outputs.iter().flatten() {
        survivors[atom.source].push(&atom.path);
    }
    for paths in &mut survivors {
        paths.sort_by(|a, b| lex(a, b));
    }
    let p: Vec<usize> = survivors.iter().map(Vec::len).collect();
    let mut offsets = Vec::with_capacity(n);
    let mut acc = 0;
    for &pi in &p {
        offsets.push(acc);
        acc += pi;
    }
    let mut images = Vec::with_capacity(acc);
    for atom in outputs.iter().flatten() {
        let rank = survivors[atom.source]
            .iter()
            .position(|path| **path == atom.path)
            .expect("atom is a survivor");
        images.push(offsets[atom.source] + rank);
    }
    let sigma = Permutation::from_zero_based(images)?;
    NormalForm::new(p, sigma, outputs.iter().map(Vec::len).collect())
}

fn lex(a: &[bool], b: &[bool]) -> Ordering {
    a.cmp(b)
}

fn trace(t: &Term, mut ins: Vec<Wire>) -> Vec<Wire> {
    match t {
        Term::Mu => {
            let right = ins.pop().expect("arity checked");
            let mut left = ins.pop().expect("arity checked");
            left.extend(right);
            vec![left]
        }
        Term::Eta => vec![Vec::new()],
        Term::Delta => {
            let wire = ins.pop().expect("arity checked");
            let split = |side: bool| {
                wire.iter()
                    .map(|a| {
                        let mut path = a.path.clone();
                        path.push(side);
                        Atom {
                            source: a.source,
                            path,
                        }
                    })
                    .collect::<Wire>()
            };
            vec![split(false), split(true)]
        }
        Term::Eps => Vec::new(),
        Term::Id => ins,
        Term::Swap => {
            ins.swap(0, 1);
            ins
        }
        Term::Perm(s) => s.zero_based().iter().map(|&i| ins[i].clone()).collect(),
        Term::Compose(outer, inner) => {
            let mid = trace(inner, ins);
            trace(outer, mid)
        }
        Term::Tensor(l, r) => {
            let (nl, _) = l.arity().expect("arity checked");
            let right = ins.split_off(nl);
            let mut out = trace(l, ins);
            out.extend(trace(r, right));
            out
        }
    }
}

/// Outcome of [`decide_equal`]; `witness` names the first differing component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub equal: bool,
    pub witness: Option<String>,
}

pub fn decide_equal(t1: &Term, t2: &Term) -> Result<Verdict> {
    let a1 = t1.arity()?;
    let a2 = t2.arity()?;
    if a1 != a2 {
        return Ok(Verdict {
            equal: false,
            witness: Some(format!(
                "arity: {}→{} vs {}→{}",
                a1.0, a1.1, a2.0, a2.1
            )),
        });
    }
    let nf1 = normalize_functorial(t1)?;
    let nf2 = normalize_functorial(t2)?;
    let witness = nf1.difference(&nf2).map(|what| match what {
        "p" => format!("p: {:?} vs {:?}", nf1.p, nf2.p),
        "q" => format!("q: {:?} vs {:?}", nf1.q, nf2.q),
        _ => format!(
            "sigma: {:?} vs {:?}",
            nf1.sigma.one_line(),
            nf2.sigma.one_line()
        ),
    });
    Ok(Verdict {
        equal: witness.is_none(),
        witness,
    })
}

/// The normal forms found by all three methods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub functorial: NormalForm,
    pub rewrite: NormalForm,
    pub trace: NormalForm,
}

impl Comparison {
    pub fn agree(&self) -> bool {
        self.functorial == self.rewrite && self.functorial == self.trace
    }
}

pub fn normalize_all(t: &Term, opts: &RewriteOptions) -> Result<Comparison> {
    Ok(Comparison {
        functorial: normalize_functorial(t)?,
        rewrite: normalize_rewrite_with(t, opts)?,
        trace: normalize_trace(t)?,
    })
}
