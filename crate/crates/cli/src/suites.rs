//! Seeded invariant suites run by `bialg check`.

use bialg::fgfmon::{self, psi, psi_inv, HatArrow};
use bialg::fset::{self, compose_ordered, from_ordered, to_ordered};
use bialg::gen::{random_fset_arrow, random_permutation, random_term, random_variant, TermConfig};
use bialg::matrix_eval::{check_axioms, normal_form_to_matrix, term_to_matrix, BialgebraTable};
use bialg::normalize::{decide_equal, normalize_all, normalize_rewrite_with, RewriteOptions, Strategy};
use bialg::terms::AXIOMS;
use bialg::words::{words_with_counts, MonoidHom};
use bialg::Term;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Settings {
    pub seed: u64,
    pub max_steps: usize,
    pub dim_bound: u128,
}

pub struct Report {
    pub name: &'static str,
    pub result: Result<String, String>,
}

type Suite = fn(&Settings, &mut ChaCha8Rng) -> Result<String, String>;

const SUITES: [(&str, Suite); 7] = [
    ("tri-oracle", tri_oracle),
    ("confluence", confluence),
    ("hat-axioms", hat_axioms),
    ("psi-bijection", psi_bijection),
    ("cube", cube),
    ("matrix", matrix),
    ("word-problem", word_problem),
];

pub fn run_all(settings: &Settings) -> Vec<Report> {
    SUITES
        .iter()
        .enumerate()
        .map(|(i, (name, suite))| {
            let mut rng = ChaCha8Rng::seed_from_u64(settings.seed.wrapping_add(i as u64));
            Report {
                name,
                result: suite(settings, &mut rng),
            }
        })
        .collect()
}

fn fail(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn tri_oracle(s: &Settings, rng: &mut ChaCha8Rng) -> Result<String, String> {
    let opts = RewriteOptions {
        max_steps: s.max_steps,
        ..Default::default()
    };
    let n = 300;
    for _ in 0..n {
        let t = random_term(rng, &TermConfig::default());
        let c = normalize_all(&t, &opts).map_err(fail)?;
        if !c.agree() {
            return Err(format!("`{t}`: {c:?}"));
        }
    }
    Ok(format!("{n} terms"))
}

fn confluence(s: &Settings, rng: &mut ChaCha8Rng) -> Result<String, String> {
    let strategies = [
        Strategy::LeftmostInnermost,
        Strategy::RightmostInnermost,
        Strategy::Random(s.seed),
        Strategy::Random(s.seed.wrapping_add(1)),
        Strategy::Random(s.seed.wrapping_add(2)),
    ];
    let n = 100;
    for _ in 0..n {
        let t = random_term(rng, &TermConfig::default());
        let mut first = None;
        for &strategy in &strategies {
            let opts = RewriteOptions {
                strategy,
                max_steps: s.max_steps,
            };
            let nf = normalize_rewrite_with(&t, &opts).map_err(fail)?;
            match &first {
                None => first = Some(nf),
                Some(f) if *f != nf => return Err(format!("`{t}` under {strategy:?}")),
                _ => {}
            }
        }
    }
    Ok(format!("{n} terms, {} strategies", strategies.len()))
}

fn hat_axioms(_: &Settings, _: &mut ChaCha8Rng) -> Result<String, String> {
    for ax in &AXIOMS {
        let l = Term::parse(ax.lhs).and_then(|t| t.eval()).map_err(fail)?;
        let r = Term::parse(ax.rhs).and_then(|t| t.eval()).map_err(fail)?;
        if l != r {
            return Err(format!("{}: {l:?} vs {r:?}", ax.name));
        }
    }
    Ok(format!("{} equations", AXIOMS.len()))
}

fn psi_bijection(_: &Settings, rng: &mut ChaCha8Rng) -> Result<String, String> {
    let mut checked = 0;
    for total in 0..=5 {
        for k1 in 0..=total {
            let k = [k1, total - k1];
            let words = words_with_counts(&k);
            let per_letter: usize = k.iter().map(|&ki| (1..=ki).product::<usize>()).product();
            let expected: usize = (1..=total).product();
            if words.len() * per_letter != expected {
                return Err(format!("{k:?}: {} words", words.len()));
            }
            for w in words {
                let perms: Vec<_> = k.iter().map(|&ki| random_permutation(rng, ki)).collect();
                let alpha = psi(&w, &perms).map_err(fail)?;
                if psi_inv(&k, &alpha).map_err(fail)? != (w.clone(), perms) {
                    return Err(format!("{k:?}: round trip fails at {w}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} round trips"))
}

fn cube(_: &Settings, rng: &mut ChaCha8Rng) -> Result<String, String> {
    let n_cases = 100;
    for _ in 0..n_cases {
        let l = rng.gen_range(0..=4);
        let m = if l == 0 { 0 } else { rng.gen_range(0..=4) };
        let n = if m == 0 { 0 } else { rng.gen_range(0..=4) };
        let f = random_fset_arrow(rng, n, m);
        let g = random_fset_arrow(rng, m, l);
        let images: Vec<Vec<usize>> = f.map().values().iter().map(|&v| vec![v]).collect();
        let free = MonoidHom::from_letters(m, &images).map_err(fail)?;
        if fgfmon::fhat(&f).forget() != free {
            return Err(format!("bottom face at {f:?}"));
        }
        let direct = fgfmon::fhat(&fset::compose_hat(&g, &f).map_err(fail)?);
        let composed: HatArrow =
            fgfmon::compose_hat(&fgfmon::fhat(&g), &fgfmon::fhat(&f)).map_err(fail)?;
        let ordered = compose_ordered(&to_ordered(&g).map_err(fail)?, &to_ordered(&f).map_err(fail)?)
            .map_err(fail)?;
        let via = fgfmon::fhat(&from_ordered(&ordered).map_err(fail)?);
        if direct != composed || via != composed {
            return Err(format!("functoriality at {g:?} ∘ {f:?}"));
        }
    }
    Ok(format!("{n_cases} pairs"))
}

fn matrix(s: &Settings, rng: &mut ChaCha8Rng) -> Result<String, String> {
    let h4 = BialgebraTable::sweedler_h4();
    if let Some(bad) = check_axioms(&h4).into_iter().find(|c| !c.passed) {
        return Err(format!("H4 fails {}", bad.name));
    }
    let n = 100;
    for _ in 0..n {
        let t = random_term(rng, &TermConfig::default());
        let direct = term_to_matrix(&t, &h4, s.dim_bound).map_err(fail)?;
        let nf = t.eval().map_err(fail)?.normal_form();
        if normal_form_to_matrix(&nf, &h4, s.dim_bound).map_err(fail)? != direct {
            return Err(format!("`{t}`"));
        }
    }
    Ok(format!("axioms and {n} terms"))
}

fn word_problem(_: &Settings, rng: &mut ChaCha8Rng) -> Result<String, String> {
    let n = 100;
    for _ in 0..n {
        let t = random_term(rng, &TermConfig::default());
        let v = random_variant(rng, &t);
        if !decide_equal(&t, &v).map_err(fail)?.equal {
            return Err(format!("`{t}` vs `{v}`"));
        }
    }
    for (a, b) in [("mu", "mu . swap"), ("delta", "swap . delta")] {
        let a = Term::parse(a).map_err(fail)?;
        let b = Term::parse(b).map_err(fail)?;
        if decide_equal(&a, &b).map_err(fail)?.equal {
            return Err(format!("`{a}` judged equal to `{b}`"));
        }
    }
    Ok(format!("{n} variants"))
}
