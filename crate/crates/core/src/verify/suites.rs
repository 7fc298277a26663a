use std::collections::HashMap;

use rayon::prelude::*;

use super::{compare, golden_fixtures, Failure, RunConfig, Suite, Tally};
use crate::coalgebra::{
    coproduct, coproduct_biideal, coproduct_left, coproduct_rec, coproduct_right, counit, graft_second,
};
use crate::dualprod::{left_path, star, star_lin, star_weighted};
use crate::error::CoeffError;
use crate::forest::{
    biideals, enumerate_forests, graft, is_biideal, order_leq, parse_forest, vertex_order, Alphabet, Forest,
};
use crate::freemod::{act_left, act_right, concat_lin, rational, Coefficient, LinComb, Pair, Rational};
use crate::morphisms::{phi, phi2, phi_at, phi_subsets, theta, theta2};
use crate::prelie::{bracket_lin, prelie, prelie_closed, prelie_lin};

type Checked = Result<Option<Failure>, CoeffError>;

pub(super) fn dispatch(suite: Suite, cfg: &RunConfig, alphabet: &Alphabet) -> Result<Tally, CoeffError> {
    let n = cfg.max_vertices;
    let mut t = Tally::default();
    match suite {
        Suite::Coassoc => coassoc(&mut t, cfg, alphabet, n)?,
        Suite::Derivation => derivation(&mut t, cfg, alphabet, n)?,
        Suite::Cocycle => cocycle(&mut t, cfg, alphabet, n)?,
        Suite::Counit => counit_laws(&mut t, cfg, alphabet, n)?,
        Suite::RecVsBiideal => rec_vs_biideal(&mut t, cfg, alphabet, n)?,
        Suite::BiidealCount => biideal_count(&mut t, alphabet, n)?,
        Suite::Duality => duality(&mut t, cfg, alphabet, n)?,
        Suite::StarAssoc => star_assoc(&mut t, cfg, alphabet, n)?,
        Suite::StarCensus => star_census(&mut t, alphabet, n)?,
        Suite::Prelie => prelie_identity(&mut t, cfg, alphabet, n)?,
        Suite::Jacobi => jacobi(&mut t, cfg, alphabet, n)?,
        Suite::PrelieClosedForm => prelie_closed_form(&mut t, cfg, alphabet, n)?,
        Suite::PhiLaws => phi_laws(&mut t, cfg, alphabet, n)?,
        Suite::ThetaLaws => theta_laws(&mut t, cfg, alphabet, n)?,
        Suite::ExamplesGolden => examples_golden(&mut t)?,
    }
    Ok(t)
}

fn names(fs: &[&Forest]) -> Vec<String> {
    fs.iter().map(|f| f.to_string()).collect()
}

fn basis(f: &Forest) -> LinComb<Forest> {
    LinComb::basis(f.clone())
}

/// Ordered pairs with `n_F + n_G ≤ total`, in enumeration order.
fn pairs(forests: &[Forest], total: usize) -> Vec<(Forest, Forest)> {
    let mut out = Vec::new();
    for f in forests {
        for g in forests {
            if f.nvertices() + g.nvertices() <= total {
                out.push((f.clone(), g.clone()));
            }
        }
    }
    out
}

fn triples(forests: &[Forest], total: usize) -> Vec<(Forest, Forest, Forest)> {
    let mut out = Vec::new();
    for (f, g) in pairs(forests, total) {
        let used = f.nvertices() + g.nvertices();
        for h in forests {
            if used + h.nvertices() <= total {
                out.push((f.clone(), g.clone(), h.clone()));
            }
        }
    }
    out
}

fn coassoc(t: &mut Tally, cfg: &RunConfig, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let fs = enumerate_forests(n, alphabet);
    t.run(&fs, |f| {
        let d = coproduct(f);
        compare(cfg, "coassociativity", names(&[f]), &coproduct_left(&d), &coproduct_right(&d))
    })
}

fn derivation(t: &mut Tally, cfg: &RunConfig, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let fs = enumerate_forests(n, alphabet);
    t.run(&pairs(&fs, n), |(f, g)| {
        let lhs = coproduct(&f.concat(g));
        let mut rhs = &act_left(f, &coproduct(g)) + &act_right(&coproduct(f), g);
        rhs.add_term((f.clone(), g.clone()), Coefficient::lambda());
        compare(cfg, "weighted derivation", names(&[f, g]), &lhs, &rhs)
    })
}

fn cocycle(t: &mut Tally, cfg: &RunConfig, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let fs = enumerate_forests(n, alphabet);
    let cases: Vec<_> = fs
        .iter()
        .flat_map(|f| alphabet.omega().iter().map(move |w| (f.clone(), w.clone())))
        .collect();
    t.run(&cases, |(f, w)| {
        let grafted = Forest::single(graft(w, f).expect("Ω decoration"));
        let lhs = coproduct(&grafted);
        let mut rhs = graft_second(w, &coproduct(f));
        rhs.add_term((grafted.clone(), Forest::empty()), -Coefficient::lambda());
        rhs.add_term((f.clone(), Forest::empty()), Coefficient::mu());
        compare(cfg, &format!("1-cocycle for {w}"), names(&[f]), &lhs, &rhs)
    })
}

fn eval_coeff(cfg: &RunConfig, c: &Coefficient) -> Result<Coefficient, CoeffError> {
    c.eval_partial(cfg.eval_lambda.as_ref(), cfg.eval_mu.as_ref(), cfg.eval_nu.as_ref())
}

fn coeff_failure(check: &str, inputs: Vec<String>, lhs: &Coefficient, rhs: &Coefficient) -> Option<Failure> {
    (lhs != rhs).then(|| Failure {
        check: check.to_string(),
        inputs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

fn counit_laws(t: &mut Tally, cfg: &RunConfig, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let fs = enumerate_forests(n, alphabet);
    t.run(&fs, |f| {
        let d = coproduct(f);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((g, h), c) in d.iter() {
            left.add_term(h.clone(), c * &eval_coeff(cfg, &counit(g))?);
            right.add_term(g.clone(), c * &eval_coeff(cfg, &counit(h))?);
        }
        let id = basis(f);
        if let Some(fail) = compare(cfg, "(ε⊗id)Δ = id", names(&[f]), &left, &id)? {
            return Ok(Some(fail));
        }
        compare(cfg, "(id⊗ε)Δ = id", names(&[f]), &right, &id)
    })?;

    let small = enumerate_forests(n.saturating_sub(1), alphabet);
    let ps = pairs(&small, n.saturating_sub(1));
    let at = |c: &Coefficient, l: &Rational| c.eval_partial(Some(l), None, None);
    let minus_one = rational(-1, 1);
    t.run(&ps, |(f, g)| {
        let lhs = at(&counit(&f.concat(g)), &minus_one)?;
        let rhs = at(&(&counit(f) * &counit(g)), &minus_one)?;
        Ok(coeff_failure("ε multiplicative at l = -1", names(&[f, g]), &lhs, &rhs))
    })?;

    let one = rational(1, 1);
    let mut witness = None;
    for (f, g) in &ps {
        let lhs = at(&counit(&f.concat(g)), &one)?;
        let rhs = at(&(&counit(f) * &counit(g)), &one)?;
        if lhs != rhs {
            witness = Some((f, g, lhs, rhs));
            break;
        }
    }
    t.cases += 1;
    match witness {
        Some((f, g, lhs, rhs)) => t.notes.push(format!(
            "ε not multiplicative at l = 1: ε({f} · {g}) = {lhs}, ε({f})ε({g}) = {rhs}"
        )),
        None => t.failures.push(Failure {
            check: "non-multiplicativity witness at l = 1".into(),
            inputs: vec![],
            lhs: "no witness".into(),
            rhs: "a witness".into(),
        }),
    }
    Ok(())
}

/// `None` when every −λ term splits all vertices and every μ term drops one.
fn grading_failure(f: &Forest, d: &LinComb<Pair>) -> Option<Failure> {
    let n = f.nvertices();
    let minus_lambda = -Coefficient::lambda();
    let mu = Coefficient::mu();
    let mut lambda_part = LinComb::zero();
    let mut mu_part = LinComb::zero();
    for ((g, h), c) in d.iter() {
        let size = g.nvertices() + h.nvertices();
        if size == n {
            lambda_part.add_term((g.clone(), h.clone()), c.clone());
        } else if size + 1 == n {
            mu_part.add_term((g.clone(), h.clone()), c.clone());
        } else {
            return Some(Failure {
                check: "grading".into(),
                inputs: vec![f.to_string()],
                lhs: format!("term {g} ⊗ {h} with {size} vertices"),
                rhs: format!("{n} or {} vertices", n as isize - 1),
            });
        }
    }
    let ok = lambda_part.iter().all(|(_, c)| *c == minus_lambda) && mu_part.iter().all(|(_, c)| *c == mu);
    (!ok).then(|| Failure {
        check: "grading".into(),
        inputs: vec![f.to_string()],
        lhs: d.to_string(),
        rhs: "-l on full splits, m on splits dropping one vertex".into(),
    })
}

fn rec_vs_biideal(t: &mut Tally, cfg: &RunConfig, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let fs = enumerate_forests(n, alphabet);
    t.run(&fs, |f| {
        let fast = coproduct_biideal(f);
        if let Some(fail) = grading_failure(f, &fast) {
            return Ok(Some(fail));
        }
        compare(cfg, "recursive = biideal", names(&[f]), &coproduct_rec(f), &fast)
    })
}

/// Counts upward-closed vertex subsets by brute force.
fn count_upsets(f: &Forest) -> usize {
    let vs = vertex_order(f);
    let k = vs.len();
    (0u64..1 << k)
        .filter(|bits| {
            (0..k).all(|i| {
                bits >> i & 1 == 0 || (0..k).all(|j| bits >> j & 1 == 1 || !order_leq(&vs[i], &vs[j]))
            })
        })
        .count()
}

fn biideal_count(t: &mut Tally, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let fs = enumerate_forests(n, alphabet);
    t.run(&fs, |f| {
        let nf = f.nvertices();
        let fail = |what: &str, got: String, want: String| {
            Ok(Some(Failure {
                check: what.to_string(),
                inputs: vec![f.to_string()],
                lhs: got,
                rhs: want,
            }))
        };
        let brute = count_upsets(f);
        if brute != nf + 1 {
            return fail("upward-closed subsets", brute.to_string(), (nf + 1).to_string());
        }
        let chain = biideals(f);
        if chain.len() != nf + 1 {
            return fail("biideal count", chain.len().to_string(), (nf + 1).to_string());
        }
        let order = vertex_order(f);
        for (k, set) in chain.iter().enumerate() {
            let prefix: Vec<_> = set.members().iter().cloned().collect();
            let mut want = order[..k].to_vec();
            want.sort();
            if !is_biideal(set) || prefix != want {
                return fail(
                    "prefix closure",
                    format!("{:?}", set.members().iter().map(ToString::to_string).collect::<Vec<_>>()),
                    format!("first {k} vertices of the order"),
                );
            }
        }
        Ok(None)
    })
}

fn duality(t: &mut Tally, cfg: &RunConfig, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let xs = enumerate_forests(n, alphabet);
    let small = enumerate_forests(n.saturating_sub(1), alphabet);
    let coproducts: Vec<_> = xs.par_iter().map(coproduct).collect();
    let mut index: HashMap<Pair, LinComb<Forest>> = HashMap::new();
    for (x, d) in xs.iter().zip(&coproducts) {
        for (yz, c) in d.iter() {
            index.entry(yz.clone()).or_default().add_term(x.clone(), c.clone());
        }
    }
    let yzs: Vec<Pair> = small
        .iter()
        .flat_map(|y| small.iter().map(move |z| (y.clone(), z.clone())))
        .collect();
    t.run(&yzs, |(y, z)| {
        let lhs = index.get(&(y.clone(), z.clone())).cloned().unwrap_or_default();
        let rhs = star_weighted(&basis(y), &basis(z), alphabet).filter(|x| x.nvertices() <= n);
        compare(cfg, "<Δx, y⊗z> = <x, y ⋆ z>", names(&[y, z]), &lhs, &rhs)
    })?;
    t.cases = t.cases - yzs.len() + yzs.len() * xs.len();
    Ok(())
}

fn star_assoc(t: &mut Tally, cfg: &RunConfig, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let fs = enumerate_forests(n, alphabet);
    t.run(&triples(&fs, n), |(f, g, h)| {
        let lhs = star_lin(&star(f, g), &basis(h));
        let rhs = star_lin(&basis(f), &star(g, h));
        compare(cfg, "⋆ associative", names(&[f, g, h]), &lhs, &rhs)
    })?;
    let m = n.saturating_sub(1);
    t.run(&triples(&enumerate_forests(m, alphabet), m), |(f, g, h)| {
        let sw = |a: &LinComb<Forest>, b: &LinComb<Forest>| star_weighted(a, b, alphabet);
        let lhs = sw(&sw(&basis(f), &basis(g)), &basis(h));
        let rhs = sw(&basis(f), &sw(&basis(g), &basis(h)));
        compare(cfg, "⋆_{l,m} associative", names(&[f, g, h]), &lhs, &rhs)
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn star_census(t: &mut Tally, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let fs = enumerate_forests(n, alphabet);
    let cases: Vec<_> = fs
        .iter()
        .flat_map(|f| fs.iter().map(move |g| (f.clone(), g.clone())))
        .collect();
    t.run(&cases, |(f, g)| {
        let (m, k) = (f.breadth(), left_path(g).len());
        let want = binomial(m + k, k);
        let r = star(f, g);
        let size = f.nvertices() + g.nvertices();
        let valid = r.iter().all(|(h, c)| {
            c.is_one()
                && h.nvertices() == size
                && parse_forest(&h.to_string(), alphabet).as_ref() == Ok(h)
        });
        if r.len() == want && valid {
            return Ok(None);
        }
        Ok(Some(Failure {
            check: "⋆ term census".into(),
            inputs: names(&[f, g]),
            lhs: r.to_string(),
            rhs: format!("{want} distinct terms with {size} vertices each"),
        }))
    })
}

fn associator(a: &Forest, b: &Forest, c: &Forest) -> LinComb<Forest> {
    let ab_c = prelie_lin(&prelie_closed(a, b), &basis(c));
    let a_bc = prelie_lin(&basis(a), &prelie_closed(b, c));
    &ab_c - &a_bc
}

fn prelie_identity(t: &mut Tally, cfg: &RunConfig, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let fs = enumerate_forests(n, alphabet);
    t.run(&triples(&fs, n), |(a, b, c)| {
        compare(cfg, "pre-Lie identity", names(&[a, b, c]), &associator(a, b, c), &associator(b, a, c))
    })
}

fn jacobi(t: &mut Tally, cfg: &RunConfig, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let fs = enumerate_forests(n, alphabet);
    t.run(&triples(&fs, n), |(a, b, c)| {
        let (a, b, c) = (basis(a), basis(b), basis(c));
        let mut sum = bracket_lin(&bracket_lin(&a, &b), &c);
        sum = &sum + &bracket_lin(&bracket_lin(&b, &c), &a);
        sum = &sum + &bracket_lin(&bracket_lin(&c, &a), &b);
        let inputs = [&a, &b, &c]
            .iter()
            .map(|x| x.iter().next().map(|(f, _)| f.to_string()).unwrap_or_default())
            .collect();
        compare(cfg, "Jacobi", inputs, &sum, &LinComb::zero())
    })
}

fn prelie_closed_form(t: &mut Tally, cfg: &RunConfig, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let fs = enumerate_forests(n, alphabet);
    t.run(&pairs(&fs, n), |(f, g)| {
        compare(cfg, "sandwich = closed form", names(&[f, g]), &prelie(f, g), &prelie_closed(f, g))
    })
}

/// Parameter pairs `(ν, ν′)` for the composition law.
pub const PHI_PAIRS: [(i64, i64, i64, i64); 5] = [(-2, 1, -1, 1), (-1, 1, 1, 1), (1, 1, 2, 1), (2, 1, 1, 2), (1, 2, -2, 1)];

fn phi_laws(t: &mut Tally, cfg: &RunConfig, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let fs = enumerate_forests(n, alphabet);
    t.run(&fs, |f| compare(cfg, "phi = phi_subsets", names(&[f]), &phi(&basis(f)), &phi_subsets(f)))?;

    let small = enumerate_forests(n.saturating_sub(1), alphabet);
    let zero = rational(0, 1);
    t.run(&small, |f| compare(cfg, "phi at 0 = id", names(&[f]), &phi_at(&basis(f), &zero), &basis(f)))?;
    for (p, q, r, s) in PHI_PAIRS {
        let (nu, nu2) = (rational(p, q), rational(r, s));
        let check = format!("phi_{nu} ∘ phi_{nu2} = phi_{}", &nu + &nu2);
        t.run(&small, |f| {
            let lhs = phi_at(&phi_at(&basis(f), &nu2), &nu);
            let rhs = phi_at(&basis(f), &(&nu + &nu2));
            compare(cfg, &check, names(&[f]), &lhs, &rhs)
        })?;
    }

    let shift = &Coefficient::mu() - &(&Coefficient::lambda() * &Coefficient::nu());
    t.run(&small, |f| {
        let lhs = coproduct_lin_of(&phi(&basis(f))).try_map_coeffs(|c| c.subst_mu(&shift))?;
        let rhs = phi2(&coproduct(f));
        compare(cfg, "Δ∘phi with m -> m - l*n = (phi⊗phi)∘Δ", names(&[f]), &lhs, &rhs)
    })
}

fn coproduct_lin_of(x: &LinComb<Forest>) -> LinComb<Pair> {
    x.map_linear(coproduct)
}

fn theta_laws(t: &mut Tally, cfg: &RunConfig, alphabet: &Alphabet, n: usize) -> Result<(), CoeffError> {
    let fs = enumerate_forests(n, alphabet);
    let scaled = &Coefficient::mu() * &Coefficient::nu();
    t.run(&fs, |f| {
        let lhs = coproduct_lin_of(&theta(&basis(f)));
        let rhs = theta2(&coproduct(f).try_map_coeffs(|c| c.subst_mu(&scaled))?);
        compare(cfg, "Δ∘theta = (theta⊗theta)∘Δ with m -> m*n", names(&[f]), &lhs, &rhs)
    })?;
    let small = enumerate_forests(n.saturating_sub(1), alphabet);
    let ps: Vec<_> = small
        .iter()
        .flat_map(|f| small.iter().map(move |g| (f.clone(), g.clone())))
        .collect();
    t.run(&ps, |(f, g)| {
        let lhs = theta(&basis(&f.concat(g)));
        let rhs = concat_lin(&theta(&basis(f)), &theta(&basis(g)));
        compare(cfg, "theta multiplicative", names(&[f, g]), &lhs, &rhs)
    })
}

fn examples_golden(t: &mut Tally) -> Result<(), CoeffError> {
    let fixtures = golden_fixtures();
    t.run(&fixtures, |fx| -> Checked {
        Ok((!fx.matches()).then(|| Failure {
            check: "golden example".into(),
            inputs: vec![fx.name.clone()],
            lhs: fx.actual.clone(),
            rhs: fx.expected.clone(),
        }))
    })
}
