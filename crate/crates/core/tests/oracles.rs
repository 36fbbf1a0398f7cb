//! Library results against hand-derived values and small independent models.

use bialg::fgfmon::{psi, HatArrow, NormalForm};
use bialg::gen::{random_term, TermConfig};
use bialg::normalize::{decide_equal, normalize_all, normalize_functorial, RewriteOptions};
use bialg::perm::{parse_cycles, Permutation};
use bialg::words::Word;
use bialg::Term;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn t(text: &str) -> Term {
    Term::parse(text).unwrap()
}

fn nf(p: &[usize], sigma: &[usize], q: &[usize]) -> NormalForm {
    NormalForm::new(p.to_vec(), Permutation::from_one_line(sigma).unwrap(), q.to_vec()).unwrap()
}

const NOTATION: &str = "(eps * id * eta * mu) . P(1 2 3 4) . (delta * delta)";

#[test]
fn normalizer_examples() {
    let cases: &[(&str, NormalForm)] = &[
        ("id", nf(&[1], &[1], &[1])),
        (NOTATION, nf(&[1, 2], &[2, 3, 1], &[1, 0, 2])),
        ("mu . (eta * id)", nf(&[1], &[1], &[1])),
        ("delta . mu", nf(&[2, 2], &[1, 3, 2, 4], &[2, 2])),
        ("(eps * id) . delta", nf(&[1], &[1], &[1])),
    ];
    for (text, expected) in cases {
        let c = normalize_all(&t(text), &RewriteOptions::default()).unwrap();
        assert!(c.agree(), "{text}: {c:?}");
        assert_eq!(&c.functorial, expected, "{text}");
    }
    for k in 0..6 {
        let term = Term::compose(Term::iter_mu(k), Term::iter_delta(k));
        let expected = NormalForm::new(vec![k], Permutation::identity(k), vec![k]).unwrap();
        assert_eq!(normalize_all(&term, &RewriteOptions::default()).unwrap().trace, expected);
    }
}

#[test]
fn notation_term_sweedler() {
    let form = normalize_functorial(&t(NOTATION)).unwrap();
    assert_eq!(t(NOTATION).arity().unwrap(), (2, 3));
    assert_eq!(form.sweedler(), "x⊗y ↦ y_(1) ⊗ 1 ⊗ y_(2)x");
}

#[test]
fn second_composite_as_terms() {
    let f = HatArrow::new(
        bialg::MonoidHom::from_letters(2, &[vec![1, 2, 1, 2]]).unwrap(),
        vec![Permutation::identity(2), parse_cycles("(12)", 2).unwrap()],
    )
    .unwrap();
    let g = HatArrow::new(
        bialg::MonoidHom::from_letters(2, &[vec![1], vec![2, 1]]).unwrap(),
        vec![parse_cycles("(12)", 2).unwrap(), Permutation::identity(1)],
    )
    .unwrap();
    let term = Term::compose(
        Term::from_normal_form(&g.normal_form()),
        Term::from_normal_form(&f.normal_form()),
    );
    let c = normalize_all(&term, &RewriteOptions::default()).unwrap();
    assert!(c.agree(), "{c:?}");
    assert_eq!(c.trace.sigma.one_line(), vec![6, 3, 1, 4, 5, 2]);
    assert_eq!(c.trace.sweedler(), "x ↦ x_(6)x_(3)x_(1)x_(4) ⊗ x_(5)x_(2)");
}

#[test]
fn equality_examples() {
    let v = decide_equal(&t("mu"), &t("mu . P(1 2)")).unwrap();
    assert!(!v.equal);
    assert!(v.witness.unwrap().starts_with("sigma"));
    assert!(decide_equal(&t("P(1 4 3)"), &t("P(1 4) . P(1 3)(4)")).unwrap().equal);
    let sigma = parse_cycles("(143)", 4).unwrap();
    assert!(decide_equal(&t("P(1 4 3)"), &Term::perm_term(&sigma)).unwrap().equal);
    // P reverses the order of composition
    assert!(!decide_equal(&t("P(1 4 3)"), &t("P(1 3)(4) . P(1 4)")).unwrap().equal);
    assert!(decide_equal(
        &t("delta . mu"),
        &t("(mu * mu) . (id * P(1 2) * id) . (delta * delta)")
    )
    .unwrap()
    .equal);
    let v = decide_equal(&t("mu"), &t("delta")).unwrap();
    assert!(v.witness.unwrap().starts_with("arity"));
}

#[test]
fn equality_is_a_congruence() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let cfg = TermConfig { max_generators: 6, max_wires: 3 };
    let pairs = [
        ("mu . (mu * id)", "mu . (id * mu)"),
        ("delta . mu", "(mu * mu) . (id * swap * id) . (delta * delta)"),
        ("swap . swap", "id * id"),
    ];
    for (a, b) in pairs {
        let (a, b) = (t(a), t(b));
        let (n, m) = a.arity().unwrap();
        for _ in 0..20 {
            let ctx = bialg::gen::random_term_from(&mut rng, m, &cfg);
            let dom = rng.gen_range(0..=3);
            let pre = bialg::gen::random_term_from(&mut rng, dom, &cfg);
            let (_, pm) = pre.arity().unwrap();
            let pad = Term::tensor(pre.clone(), Term::ids(n));
            let wrap = |x: &Term| {
                Term::compose(
                    Term::tensor(Term::ids(pm), ctx.clone()),
                    Term::compose(Term::tensor(Term::ids(pm), x.clone()), pad.clone()),
                )
            };
            assert!(decide_equal(&wrap(&a), &wrap(&b)).unwrap().equal);
        }
    }
}

#[test]
fn equality_is_an_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let terms: Vec<Term> = (0..40)
        .map(|_| random_term(&mut rng, &TermConfig { max_generators: 4, max_wires: 2 }))
        .collect();
    let eq = |a: &Term, b: &Term| decide_equal(a, b).unwrap().equal;
    for a in &terms {
        assert!(eq(a, a));
        for b in &terms {
            assert_eq!(eq(a, b), eq(b, a));
            if eq(a, b) {
                for c in &terms {
                    if eq(b, c) {
                        assert!(eq(a, c));
                    }
                }
            }
        }
    }
}

/// Ψ computed directly: slot `offset_i + r` goes to the position of the
/// `σ_i(r)`-th occurrence of letter `i` in `w`.
fn psi_model(w: &[usize], perms: &[Vec<usize>]) -> Vec<usize> {
    let m = perms.len();
    let mut offset = vec![0; m + 1];
    for i in 0..m {
        offset[i + 1] = offset[i] + perms[i].len();
    }
    let mut positions = vec![Vec::new(); m];
    for (pos, &l) in w.iter().enumerate() {
        positions[l - 1].push(pos + 1);
    }
    let mut out = vec![0; w.len()];
    for i in 0..m {
        for r in 0..perms[i].len() {
            let image_slot = perms[i][r] - 1;
            out[offset[i] + r] = positions[i][image_slot];
        }
    }
    out
}

#[test]
fn psi_matches_direct_model() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..500 {
        let m = rng.gen_range(1..=3);
        let letters: Vec<usize> = (0..rng.gen_range(0..=8)).map(|_| rng.gen_range(1..=m)).collect();
        let w = Word::new(m, &letters).unwrap();
        let perms: Vec<Permutation> = w
            .letter_counts()
            .iter()
            .map(|&k| bialg::gen::random_permutation(&mut rng, k))
            .collect();
        let one_line: Vec<Vec<usize>> = perms.iter().map(Permutation::one_line).collect();
        assert_eq!(psi(&w, &perms).unwrap().one_line(), psi_model(&letters, &one_line));
    }
}

#[test]
fn multiplication_through_comultiplication() {
    // x⊗y ↦ x_(1)y_(1)x_(2)y_(2)
    let c = normalize_all(&t("mu . delta . mu"), &RewriteOptions::default()).unwrap();
    assert!(c.agree(), "{c:?}");
    assert_eq!(c.functorial, nf(&[2, 2], &[1, 3, 2, 4], &[4]));
}
