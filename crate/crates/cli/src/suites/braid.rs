//! Identity checks in the positive braid monoid ring.

use bshuffle::braid::{
    additive_shuffle, additive_shuffle_by_second_recurrence, half_twist, lift_symmetrizer,
    mult_shuffle, mult_shuffle_descending, shuffle_permutations, sum_over_permutation_lifts,
    trinomial_shuffle, BraidRingElement, MirrorKind, NormalForm, Permutation, PositiveWord,
};
use bshuffle::sampling;
use rand::Rng;

use crate::report::{Record, Recorder, SuiteConfig};

pub fn run(cfg: &SuiteConfig) -> Vec<Record> {
    let mut rec = Recorder::new();
    let strands = cfg.max_strands;
    let deep = strands + 1; // the trinomial and telescoping checks go deeper

    normal_form_invariance(&mut rec, cfg);
    shufrec_equivalence(&mut rec, strands.max(8));
    lift_oracles(&mut rec, deep.min(7));
    symsh_with_mirrors(&mut rec, strands);
    hsh(&mut rec, strands);
    ctsh(&mut rec, deep.min(7));
    lue(&mut rec, deep.min(7));
    muh(&mut rec, strands.max(8));
    ees4(&mut rec, deep.min(7));
    aau(&mut rec, cfg);

    rec.into_records()
}

/// Apply one random legal rewriting move (far commutation or braid move) to
/// a positive word, if any applies.
fn random_move<R: Rng>(rng: &mut R, letters: &mut Vec<u8>) {
    let mut sites: Vec<(usize, bool)> = Vec::new();
    for i in 0..letters.len().saturating_sub(1) {
        if letters[i].abs_diff(letters[i + 1]) > 1 {
            sites.push((i, false));
        }
    }
    for i in 0..letters.len().saturating_sub(2) {
        if letters[i] == letters[i + 2] && letters[i].abs_diff(letters[i + 1]) == 1 {
            sites.push((i, true));
        }
    }
    if sites.is_empty() {
        return;
    }
    let (i, braid) = sites[rng.gen_range(0..sites.len())];
    if braid {
        let (a, b) = (letters[i], letters[i + 1]);
        letters[i] = b;
        letters[i + 1] = a;
        letters[i + 2] = b;
    } else {
        letters.swap(i, i + 1);
    }
}

fn normal_form_invariance(rec: &mut Recorder, cfg: &SuiteConfig) {
    let trials = cfg.trials.max(1000);
    let mut rng = sampling::rng_for(cfg.seed, "braid-nf");
    let mut bad = None;
    for _ in 0..trials {
        let n = rng.gen_range(3..=cfg.max_strands.min(7).max(3));
        let len = rng.gen_range(1..=12);
        let w = sampling::positive_word(&mut rng, n, len);
        let base = NormalForm::of_word(&w);
        let mut letters = w.letters().to_vec();
        for _ in 0..8 {
            random_move(&mut rng, &mut letters);
        }
        let moved = PositiveWord::new(n, letters).expect("moves stay in range");
        if NormalForm::of_word(&moved) != base {
            bad = Some(format!("{w} vs {moved} on {n} strands"));
            break;
        }
    }
    rec.check(
        "oracle:normal-form-rewrite-invariance",
        format!("trials={trials}, strands<=7"),
        bad.is_none(),
        || bad.unwrap_or_default(),
    );
}

fn shufrec_equivalence(rec: &mut Recorder, total: usize) {
    let mut bad = None;
    'outer: for m in 0..=total {
        for n in 0..=total - m {
            if additive_shuffle(m, n) != additive_shuffle_by_second_recurrence(m, n) {
                bad = Some(format!("m={m}, n={n}"));
                break 'outer;
            }
        }
    }
    rec.check(
        "shufrec=shufrec2",
        format!("m+n<={total}"),
        bad.is_none(),
        || bad.unwrap_or_default(),
    );
}

fn lift_oracles(rec: &mut Recorder, total: usize) {
    let mut bad = None;
    'outer: for m in 0..=total {
        for n in 0..=total - m {
            let oracle = sum_over_permutation_lifts(&shuffle_permutations(m, n)).unwrap();
            if additive_shuffle(m, n) != oracle {
                bad = Some(format!("shuffle m={m}, n={n}"));
                break 'outer;
            }
        }
    }
    rec.check(
        "oracle:shuffle-permutation-lifts",
        format!("m+n<={total}"),
        bad.is_none(),
        || bad.clone().unwrap_or_default(),
    );
    let mut bad = None;
    for n in 1..=total {
        let oracle = sum_over_permutation_lifts(&Permutation::all(n)).unwrap();
        if lift_symmetrizer(n) != oracle {
            bad = Some(format!("n={n}"));
            break;
        }
    }
    rec.check(
        "oracle:symmetrizer-permutation-lifts",
        format!("n<={total}"),
        bad.is_none(),
        || bad.unwrap_or_default(),
    );
}

/// The four decompositions of the symmetrizer: the printed one and its
/// images under the mirror (anti)automorphisms.
fn symsh_with_mirrors(rec: &mut Recorder, total: usize) {
    let mut bad: Vec<String> = Vec::new();
    for m in 1..=total - 1 {
        for n in 1..=total - m {
            let big = lift_symmetrizer(m + n);
            let strands = m + n;
            let base = additive_shuffle(n, m)
                .multiply(&lift_symmetrizer(m).embed(strands))
                .unwrap()
                .multiply(&lift_symmetrizer(n).shift(m))
                .unwrap();
            if base != big {
                bad.push(format!("plain m={m} n={n}"));
            }
            // image under a: Sigma's relabel, products keep order
            let a_side = additive_shuffle(n, m)
                .mirror(MirrorKind::A)
                .multiply(&lift_symmetrizer(m).embed(strands).mirror(MirrorKind::A))
                .unwrap()
                .multiply(&lift_symmetrizer(n).shift(m).mirror(MirrorKind::A))
                .unwrap();
            if a_side != big {
                bad.push(format!("mirror-a m={m} n={n}"));
            }
            // image under the antiautomorphism b: order reverses
            let b_side = lift_symmetrizer(n)
                .shift(m)
                .mirror(MirrorKind::B)
                .multiply(&lift_symmetrizer(m).embed(strands).mirror(MirrorKind::B))
                .unwrap()
                .multiply(&additive_shuffle(n, m).mirror(MirrorKind::B))
                .unwrap();
            if b_side != big {
                bad.push(format!("mirror-b m={m} n={n}"));
            }
            let ab_side = lift_symmetrizer(n)
                .shift(m)
                .mirror(MirrorKind::AB)
                .multiply(&lift_symmetrizer(m).embed(strands).mirror(MirrorKind::AB))
                .unwrap()
                .multiply(&additive_shuffle(n, m).mirror(MirrorKind::AB))
                .unwrap();
            if ab_side != big {
                bad.push(format!("mirror-ab m={m} n={n}"));
            }
        }
    }
    rec.check(
        "symsh+mirrors",
        format!("m+n<={total}, all four decompositions"),
        bad.is_empty(),
        || bad.join("; "),
    );
}

fn hsh(rec: &mut Recorder, total: usize) {
    let mut bad: Vec<String> = Vec::new();
    for m in 1..=total {
        for n in 1..=total.saturating_sub(m) {
            for k in 1..=total.saturating_sub(m + n) {
                let strands = m + n + k;
                let big = lift_symmetrizer(strands);
                let sig = |j: usize, up: usize| lift_symmetrizer(j).shift(up).embed(strands);
                // first chain: Sha_{n+k,m} Sigma_m Sigma_{n+k}^{up m}
                //   = Sha_{n+k,m} Sha_{k,n}^{up m} Sigma_m Sigma_n^{up m}
                //     Sigma_k^{up m+n}
                let chain_a1 = additive_shuffle(n + k, m)
                    .multiply(&sig(m, 0))
                    .unwrap()
                    .multiply(&sig(n + k, m))
                    .unwrap();
                let tail = sig(m, 0)
                    .multiply(&sig(n, m))
                    .unwrap()
                    .multiply(&sig(k, m + n))
                    .unwrap();
                let chain_a2 = additive_shuffle(n + k, m)
                    .multiply(&additive_shuffle(k, n).shift(m).embed(strands))
                    .unwrap()
                    .multiply(&tail)
                    .unwrap();
                // second chain: Sha_{k,m+n} Sigma_{m+n} Sigma_k^{up m+n}
                //   = Sha_{k,m+n} Sha_{n,m} Sigma_m Sigma_n^{up m}
                //     Sigma_k^{up m+n}
                let chain_b1 = additive_shuffle(k, m + n)
                    .multiply(&sig(m + n, 0))
                    .unwrap()
                    .multiply(&sig(k, m + n))
                    .unwrap();
                let chain_b2 = additive_shuffle(k, m + n)
                    .multiply(&additive_shuffle(n, m).embed(strands))
                    .unwrap()
                    .multiply(&tail)
                    .unwrap();
                for (tag, side) in [
                    ("a1", &chain_a1),
                    ("a2", &chain_a2),
                    ("b1", &chain_b1),
                    ("b2", &chain_b2),
                ] {
                    if side != &big {
                        bad.push(format!("{tag} at m={m} n={n} k={k}"));
                    }
                }
            }
        }
    }
    rec.check("hsh", format!("m+n+k<={total}"), bad.is_empty(), || {
        bad.join("; ")
    });
}

fn ctsh(rec: &mut Recorder, total: usize) {
    let mut bad = None;
    'outer: for k in 0..=total {
        for n in 0..=total - k {
            for m in 0..=total - k - n {
                if let Err(e) = trinomial_shuffle(k, n, m) {
                    bad = Some(format!("k={k} n={n} m={m}: {e}"));
                    break 'outer;
                }
            }
        }
    }
    rec.check("ctsh", format!("k+n+m<={total}"), bad.is_none(), || {
        bad.unwrap_or_default()
    });
}

fn lue(rec: &mut Recorder, total: usize) {
    let mut bad: Vec<String> = Vec::new();
    for n in 1..=total {
        for k in 1..=n {
            let mut lhs = BraidRingElement::one(n);
            for j in 1..=k {
                lhs = lhs
                    .multiply(&additive_shuffle(1, n - j).embed(n))
                    .unwrap();
            }
            let rhs = additive_shuffle(k, n - k)
                .embed(n)
                .multiply(&lift_symmetrizer(k).shift(n - k).embed(n))
                .unwrap();
            if lhs != rhs {
                bad.push(format!("n={n} k={k}"));
            }
        }
    }
    rec.check("lue", format!("n<={total}, k<=n"), bad.is_empty(), || {
        bad.join("; ")
    });
}

fn muh(rec: &mut Recorder, total: usize) {
    let mut bad: Vec<String> = Vec::new();
    for m in 0..=total {
        for n in 0..=total - m {
            let strands = (m + n).max(1);
            let cur = mult_shuffle(m, n);
            if cur != mult_shuffle_descending(m, n) {
                bad.push(format!("explicit forms m={m} n={n}"));
            }
            let word = |letters: Vec<u8>| {
                BraidRingElement::from_word(&PositiveWord::new(strands, letters).unwrap())
            };
            if n >= 1 {
                // muh1a: barSha_{m,n} = barSha_{m,n-1} sigma_{m+n-1} ... sigma_n
                let run: Vec<u8> = (n..=m + n - 1).rev().map(|i| i as u8).collect();
                let lhs = mult_shuffle(m, n - 1)
                    .embed(strands)
                    .multiply(&word(run))
                    .unwrap();
                if lhs != cur {
                    bad.push(format!("muh1a m={m} n={n}"));
                }
                // muh2a: barSha_{m,n} = sigma_m ... sigma_1 barSha_{m,n-1}^{up 1}
                let run: Vec<u8> = (1..=m).rev().map(|i| i as u8).collect();
                let lhs = word(run)
                    .multiply(&mult_shuffle(m, n - 1).shift_embedded(1, strands))
                    .unwrap();
                if lhs != cur {
                    bad.push(format!("muh2a m={m} n={n}"));
                }
            }
            if m >= 1 {
                // muh1b: barSha_{m,n} = barSha_{m-1,n}^{up 1} sigma_1 ... sigma_n
                let run: Vec<u8> = (1..=n).map(|i| i as u8).collect();
                let lhs = mult_shuffle(m - 1, n)
                    .shift_embedded(1, strands)
                    .multiply(&word(run))
                    .unwrap();
                if lhs != cur {
                    bad.push(format!("muh1b m={m} n={n}"));
                }
                // muh2b: barSha_{m,n} = sigma_m ... sigma_{m+n-1} barSha_{m-1,n}
                let run: Vec<u8> = (m..=m + n - 1).map(|i| i as u8).collect();
                let lhs = word(run)
                    .multiply(&mult_shuffle(m - 1, n).embed(strands))
                    .unwrap();
                if lhs != cur {
                    bad.push(format!("muh2b m={m} n={n}"));
                }
            }
        }
    }
    rec.check(
        "muh1+muh2",
        format!("m+n<={total}, all four recursions"),
        bad.is_empty(),
        || bad.join("; "),
    );
}

fn ees4(rec: &mut Recorder, total: usize) {
    let mut bad: Vec<String> = Vec::new();
    for n in 2..=total {
        let ht = half_twist(n);
        let nf = match ht.as_single_word() {
            Some(nf) => nf,
            None => {
                bad.push(format!("not a single word at n={n}"));
                continue;
            }
        };
        if nf.factors().len() != 1 || nf.factors()[0] != Permutation::longest(n) {
            bad.push(format!("not the longest-element lift at n={n}"));
        }
        // the half twist is the top-length part of the symmetrizer
        if lift_symmetrizer(n).top_length_part() != ht {
            bad.push(format!("top part of Sigma_{n} differs"));
        }
    }
    rec.check("ees4", format!("n<={total}"), bad.is_empty(), || {
        bad.join("; ")
    });
}

fn aau(rec: &mut Recorder, cfg: &SuiteConfig) {
    let mut rng = sampling::rng_for(cfg.seed, "braid-aau");
    let mut bad: Vec<String> = Vec::new();
    for _ in 0..cfg.trials.max(10) {
        let n = rng.gen_range(3..=cfg.max_strands.min(6).max(3));
        let x = BraidRingElement::from_word(&sampling::positive_word(&mut rng, n, 6));
        let y = BraidRingElement::from_word(&sampling::positive_word(&mut rng, n, 6));
        let xy = x.multiply(&y).unwrap();
        // a is an automorphism, b an antiautomorphism, both involutive
        if xy.mirror(MirrorKind::A)
            != x.mirror(MirrorKind::A).multiply(&y.mirror(MirrorKind::A)).unwrap()
        {
            bad.push(format!("a not multiplicative on {n} strands"));
        }
        if xy.mirror(MirrorKind::B)
            != y.mirror(MirrorKind::B).multiply(&x.mirror(MirrorKind::B)).unwrap()
        {
            bad.push(format!("b not antimultiplicative on {n} strands"));
        }
        if x.mirror(MirrorKind::A).mirror(MirrorKind::A) != x
            || x.mirror(MirrorKind::B).mirror(MirrorKind::B) != x
        {
            bad.push("mirrors are not involutive".to_string());
        }
    }
    rec.check(
        "aau",
        format!("random words, trials={}", cfg.trials.max(10)),
        bad.is_empty(),
        || bad.join("; "),
    );
}
