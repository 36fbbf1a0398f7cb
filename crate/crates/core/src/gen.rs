//! Seeded random terms, arrows and semantics-preserving term variants for
//! property tests and the verification suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::fgfmon::{HatArrow, NormalForm};
use crate::fset::{from_ordered, FSetHatArrow, OrderedFibreArrow};
use crate::perm::Permutation;
use crate::terms::Term;
use crate::words::{MonoidHom, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermConfig {
    /// Upper bound on `mu`, `eta`, `delta`, `eps` leaves.
    pub max_generators: usize,
    /// Upper bound on the inputs and outputs of every subterm.
    pub max_wires: usize,
}

impl Default for TermConfig {
    fn default() -> Self {
        TermConfig {
            max_generators: 12,
            max_wires: 4,
        }
    }
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_zero_based(images).expect("a shuffle is a bijection")
}

/// A random well-typed term respecting `cfg`.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, cfg: &TermConfig) -> Term {
    let cap = cfg.max_wires.max(1);
    let dom = rng.gen_range(0..=cap);
    let budget = rng.gen_range(1..=cfg.max_generators.max(1));
    term_on(rng, dom, cap, budget, 3).0
}

/// A random term with exactly the given number of inputs.
pub fn random_term_from<R: Rng + ?Sized>(rng: &mut R, dom: usize, cfg: &TermConfig) -> Term {
    let cap = cfg.max_wires.max(dom);
    let budget = rng.gen_range(1..=cfg.max_generators.max(1));
    term_on(rng, dom, cap, budget, 3).0
}

/// Returns `(term, outputs, generators used)`; every width inside stays `<= cap`.
fn term_on<R: Rng + ?Sized>(
    rng: &mut R,
    w: usize,
    cap: usize,
    budget: usize,
    depth: usize,
) -> (Term, usize, usize) {
    if depth > 0 && w >= 1 && cap >= 2 && rng.gen_bool(0.25) {
        let w1 = rng.gen_range(0..=w);
        let w2 = w - w1;
        let cap1 = rng.gen_range(w1..=cap - w2);
        let cap2 = cap - cap1;
        let b1 = rng.gen_range(0..=budget);
        let (a, ca, ua) = term_on(rng, w1, cap1, b1, depth - 1);
        let (b, cb, ub) = term_on(rng, w2, cap2, budget - ua, depth - 1);
        return (Term::tensor(a, b), ca + cb, ua + ub);
    }
    let pieces = rng.gen_range(1..=3);
    let mut parts = Vec::with_capacity(pieces);
    let mut width = w;
    let mut used = 0;
    for _ in 0..pieces {
        let (t, out, u) = if depth > 0 && rng.gen_bool(0.3) {
            let sub = rng.gen_range(0..=budget - used);
            term_on(rng, width, cap, sub, depth - 1)
        } else {
            layer(rng, width, cap, budget - used)
        };
        parts.push(t);
        width = out;
        used += u;
    }
    while used < budget && rng.gen_bool(0.7) {
        let (t, out, u) = layer(rng, width, cap, budget - used);
        parts.push(t);
        width = out;
        used += u;
    }
    (random_compose(rng, parts), width, used)
}

/// Composes `parts` (first element runs first) with random bracketing.
fn random_compose<R: Rng + ?Sized>(rng: &mut R, mut parts: Vec<Term>) -> Term {
    if parts.len() == 1 {
        return parts.pop().expect("one part");
    }
    let split = rng.gen_range(1..parts.len());
    let later = parts.split_off(split);
    let inner = random_compose(rng, parts);
    let outer = random_compose(rng, later);
    Term::compose(outer, inner)
}

fn random_tensor<R: Rng + ?Sized>(rng: &mut R, mut parts: Vec<Term>) -> Term {
    match parts.len() {
        0 => Term::Perm(Permutation::identity(0)),
        1 => parts.pop().expect("one part"),
        n => {
            let split = rng.gen_range(1..n);
            let right = parts.split_off(split);
            Term::tensor(random_tensor(rng, parts), random_tensor(rng, right))
        }
    }
}

/// One layer of blocks side by side over `w` wires.
fn layer<R: Rng + ?Sized>(rng: &mut R, w: usize, cap: usize, budget: usize) -> (Term, usize, usize) {
    let mut blocks = Vec::new();
    let mut i = 0;
    let mut out = 0;
    let mut used = 0;
    loop {
        let remaining = w - i;
        let left = budget - used;
        // width at the end of the layer if everything else passes through
        let projected = |consumed: usize, produced: usize| out + produced + remaining - consumed;
        let mut options: Vec<(Term, usize, usize, usize)> = Vec::new();
        if left > 0 {
            if remaining >= 2 {
                options.push((Term::Mu, 2, 1, 1));
            }
            if remaining >= 1 && projected(1, 2) <= cap {
                options.push((Term::Delta, 1, 2, 1));
            }
            if remaining >= 1 {
                options.push((Term::Eps, 1, 0, 1));
            }
            if projected(0, 1) <= cap && rng.gen_bool(0.3) {
                options.push((Term::Eta, 0, 1, 1));
            }
        }
        let generator_options = options.len();
        if remaining >= 1 {
            options.push((Term::Id, 1, 1, 0));
        }
        if remaining >= 2 {
            options.push((Term::Swap, 2, 2, 0));
            let d = rng.gen_range(2..=remaining);
            let sigma = random_permutation(rng, d);
            options.push((Term::Perm(sigma), d, d, 0));
        }
        if options.is_empty() {
            break;
        }
        let pick = if generator_options > 0 && rng.gen_bool(0.55) {
            rng.gen_range(0..generator_options)
        } else {
            rng.gen_range(0..options.len())
        };
        let (t, consumed, produced, g) = options.swap_remove(pick);
        blocks.push(t);
        i += consumed;
        out += produced;
        used += g;
        if i == w && (left == g || !rng.gen_bool(0.2)) {
            break;
        }
    }
    (random_tensor(rng, blocks), out, used)
}

/// A term with the same meaning as `t`, obtained by re-bracketing, swapping
/// permutation decompositions, inserting identities and applying axioms.
pub fn random_variant<R: Rng + ?Sized>(rng: &mut R, t: &Term) -> Term {
    let t = vary(rng, t);
    let (n, m) = t.arity().expect("variants stay well typed");
    match rng.gen_range(0..4) {
        0 => Term::compose(Term::ids(m), t),
        1 => Term::compose(t, Term::perm_term(&Permutation::identity(n))),
        2 => Term::tensor(t, Term::Perm(Permutation::identity(0))),
        _ => t,
    }
}

fn vary<R: Rng + ?Sized>(rng: &mut R, t: &Term) -> Term {
    match t {
        Term::Compose(a, b) => {
            let a = vary(rng, a);
            let b = vary(rng, b);
            match (&a, &b) {
                // (x . y) . b  ->  x . (y . b)
                (Term::Compose(x, y), _) if rng.gen_bool(0.5) => Term::compose(
                    (**x).clone(),
                    Term::compose((**y).clone(), b.clone()),
                ),
                // a . (x . y)  ->  (a . x) . y
                (_, Term::Compose(x, y)) if rng.gen_bool(0.5) => Term::compose(
                    Term::compose(a.clone(), (**x).clone()),
                    (**y).clone(),
                ),
                _ => Term::compose(a, b),
            }
        }
        Term::Tensor(a, b) => {
            let a = vary(rng, a);
            let b = vary(rng, b);
            match (&a, &b) {
                (Term::Tensor(x, y), _) if rng.gen_bool(0.5) => {
                    Term::tensor((**x).clone(), Term::tensor((**y).clone(), b.clone()))
                }
                // (x . y) * (u . v)  ->  (x * u) . (y * v)
                (Term::Compose(x, y), Term::Compose(u, v)) if rng.gen_bool(0.5) => Term::compose(
                    Term::tensor((**x).clone(), (**u).clone()),
                    Term::tensor((**y).clone(), (**v).clone()),
                ),
                _ => Term::tensor(a, b),
            }
        }
        Term::Perm(sigma) => match rng.gen_range(0..3) {
            0 => Term::perm_term(sigma),
            1 => redecompose(rng, sigma),
            _ => t.clone(),
        },
        Term::Swap if rng.gen_bool(0.5) => Term::Perm(Permutation::adjacent(2, 1)),
        Term::Mu if rng.gen_bool(0.3) => {
            // μ = μ . (μ . (id * η) * id)
            Term::compose(
                Term::Mu,
                Term::tensor(Term::compose(Term::Mu, Term::tensor(Term::Id, Term::Eta)), Term::Id),
            )
        }
        Term::Delta if rng.gen_bool(0.3) => {
            // Δ = (id * ((ε * id) . Δ)) . Δ
            Term::compose(
                Term::tensor(Term::Id, Term::compose(Term::tensor(Term::Eps, Term::Id), Term::Delta)),
                Term::Delta,
            )
        }
        Term::Id if rng.gen_bool(0.2) => Term::compose(Term::Mu, Term::tensor(Term::Eta, Term::Id)),
        _ => t.clone(),
    }
}

/// `P_σ` written as `P_τ . P_ρ` for a random split `σ = ρ ∘ τ`.
fn redecompose<R: Rng + ?Sized>(rng: &mut R, sigma: &Permutation) -> Term {
    let rho = random_permutation(rng, sigma.degree());
    let tau = rho.inverse().compose(sigma).expect("same degree");
    // P_{ρ∘τ} = P_τ ∘ P_ρ
    Term::compose(Term::perm_term(&tau), Term::Perm(rho))
}

/// A random homomorphism `n -> m` with image words of length `<= max_len`.
pub fn random_hom<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, max_len: usize) -> MonoidHom {
    let images = (0..n)
        .map(|_| {
            let len = if m == 0 { 0 } else { rng.gen_range(0..=max_len) };
            Word::from_zero_based(m, (0..len).map(|_| rng.gen_range(0..m)).collect())
        })
        .collect();
    MonoidHom::new(m, images).expect("images built over the target")
}

pub fn random_arrow<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, max_len: usize) -> HatArrow {
    let hom = random_hom(rng, n, m, max_len);
    let perms = hom
        .total_image()
        .letter_counts()
        .into_iter()
        .map(|k| random_permutation(rng, k))
        .collect();
    HatArrow::new(hom, perms).expect("degrees follow the letter counts")
}

pub fn random_normal_form<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    m: usize,
    max_strands: usize,
) -> NormalForm {
    let s = if n == 0 || m == 0 { 0 } else { rng.gen_range(0..=max_strands) };
    let p = random_composition(rng, s, n);
    let q = random_composition(rng, s, m);
    NormalForm::new(p, random_permutation(rng, s), q).expect("sums match")
}

/// `parts` non-negative integers summing to `total` (`total` must be 0 when `parts` is 0).
fn random_composition<R: Rng + ?Sized>(rng: &mut R, total: usize, parts: usize) -> Vec<usize> {
    let mut out = vec![0; parts];
    if parts == 0 {
        return out;
    }
    for _ in 0..total {
        out[rng.gen_range(0..parts)] += 1;
    }
    out
}

/// A random map `[n] -> [m]` with randomly ordered fibres.
///
/// Panics if `m == 0 < n`, since no such map exists.
pub fn random_ordered<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> OrderedFibreArrow {
    assert!(m > 0 || n == 0, "no map from a non-empty set to the empty set");
    let mut fibres = vec![Vec::new(); m];
    let mut points: Vec<usize> = (1..=n).collect();
    points.shuffle(rng);
    if m > 0 {
        for x in points {
            fibres[rng.gen_range(0..m)].push(x);
        }
    }
    OrderedFibreArrow::new(fibres).expect("a partition of 1..=n")
}

/// A random arrow of the decorated finite-set category whose permutation orders its fibres.
pub fn random_fset_arrow<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> FSetHatArrow {
    from_ordered(&random_ordered(rng, n, m)).expect("ordered fibres give a valid arrow")
}
