//! Brute-force oracles shared by the integration tests. None of them go
//! through the library's recurrences or enumerators.
#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use triad::{QPoly, Scalar};

pub fn int(v: i64) -> Scalar {
    Scalar::from_int(v)
}

pub fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer weights, length `0..=max_len`, entries in `[-5, 5]`.
pub fn random_int_weights(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<i64> {
    let len = rng.random_range(0..=max_len);
    (0..len).map(|_| rng.random_range(-5..=5)).collect()
}

pub fn scalars(w: &[i64]) -> Vec<Scalar> {
    w.iter().map(|&v| int(v)).collect()
}

/// `e_k(w)` summed over subsets given as bitmasks.
pub fn elementary(w: &[Scalar], k: usize) -> Scalar {
    let n = w.len();
    let mut acc = Scalar::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut p = Scalar::one();
        for (i, wi) in w.iter().enumerate() {
            if mask & (1 << i) != 0 {
                p *= wi;
            }
        }
        acc += &p;
    }
    acc
}

/// `h_k(w)` summed over multiplicity vectors `(a_1, ..., a_n)` with `sum a_i = k`.
pub fn homogeneous(w: &[Scalar], k: usize) -> Scalar {
    fn go(w: &[Scalar], rem: usize, acc: Scalar, out: &mut Scalar) {
        match w.split_first() {
            None => {
                if rem == 0 {
                    *out += &acc;
                }
            }
            Some((first, rest)) => {
                let mut term = acc;
                for a in 0..=rem {
                    if a > 0 {
                        term *= first;
                    }
                    go(rest, rem - a, term.clone(), out);
                }
            }
        }
    }
    let mut out = Scalar::zero();
    go(w, k, Scalar::one(), &mut out);
    out
}

/// Power sums `p_1..=p_k`.
fn power_sums(w: &[Scalar], k: usize) -> Vec<Scalar> {
    (0..=k)
        .map(|j| if j == 0 { int(w.len() as i64) } else { w.iter().map(|x| x.pow(j as u32)).sum() })
        .collect()
}

/// `e_k` from Newton's identities `k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i`.
pub fn newton_elementary(w: &[Scalar], k: usize) -> Scalar {
    let p = power_sums(w, k);
    let mut e = vec![Scalar::one()];
    for m in 1..=k {
        let mut acc = Scalar::zero();
        for i in 1..=m {
            let term = &e[m - i] * &p[i];
            if i % 2 == 1 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        e.push(acc.checked_div(&int(m as i64)).unwrap());
    }
    e.swap_remove(k)
}

/// `h_k` from `k h_k = sum_{i=1}^k h_{k-i} p_i`.
pub fn newton_homogeneous(w: &[Scalar], k: usize) -> Scalar {
    let p = power_sums(w, k);
    let mut h = vec![Scalar::one()];
    for m in 1..=k {
        let acc: Scalar = (1..=m).map(|i| &h[m - i] * &p[i]).sum();
        h.push(acc.checked_div(&int(m as i64)).unwrap());
    }
    h.swap_remove(k)
}

/// `binom(n, k)` by the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, j| acc * (n - j) as i128 / (j + 1) as i128)
}

/// Number of subsets of `{1..n}` of each size.
pub fn subset_counts(n: usize) -> Vec<i64> {
    let mut counts = vec![0i64; n + 1];
    for mask in 0u32..(1 << n) {
        counts[mask.count_ones() as usize] += 1;
    }
    counts
}

/// Number of set partitions of `{1..n}` by block count, via restricted growth strings.
pub fn set_partition_counts(n: usize) -> Vec<i64> {
    let mut counts = vec![0i64; n + 1];
    if n == 0 {
        counts[0] = 1;
        return counts;
    }
    let mut a = vec![0usize; n];
    loop {
        let blocks = a.iter().max().unwrap() + 1;
        counts[blocks] += 1;
        // next restricted growth string: a[0] = 0, a[i] <= 1 + max(a[..i])
        let mut i = n - 1;
        loop {
            if i == 0 {
                return counts;
            }
            let bound = a[..i].iter().max().unwrap() + 1;
            if a[i] < bound {
                a[i] += 1;
                for x in &mut a[i + 1..] {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Number of permutations of `{1..n}` by cycle count.
pub fn permutation_cycle_counts(n: usize) -> Vec<i64> {
    let mut counts = vec![0i64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if !seen[start] {
                cycles += 1;
                let mut j = start;
                while !seen[j] {
                    seen[j] = true;
                    j = perm[j];
                }
            }
        }
        counts[cycles] += 1;
        // lexicographic successor
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return counts;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// `[n k]_q` as the inversion generating function of 0-1 words with `k` ones.
pub fn gauss_by_inversions(n: usize, k: usize) -> Scalar {
    let mut coeffs = vec![0i64; k * (n - k.min(n)) + 1];
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut inv = 0;
        let mut ones_seen = 0;
        for i in 0..n {
            if mask & (1 << i) != 0 {
                ones_seen += 1;
            } else {
                inv += ones_seen;
            }
        }
        coeffs[inv] += 1;
    }
    Scalar::from(QPoly::from_integers(&coeffs))
}

/// `{n k}` by inclusion-exclusion, `(1/k!) sum_j (-1)^j C(k,j) (k-j)^n`.
pub fn stirling2_formula(n: u32, k: u32) -> i128 {
    let mut acc = 0i128;
    for j in 0..=k {
        let term = binomial(k as u64, j as u64) * ((k - j) as i128).pow(n);
        acc += if j % 2 == 0 { term } else { -term };
    }
    acc / (1..=k as i128).product::<i128>()
}

/// Row `n` of unsigned first-kind Stirling numbers as the coefficients of
/// the rising factorial `x (x+1) ... (x+n-1)`.
pub fn stirling1_rising(n: usize) -> Vec<i128> {
    let mut p = vec![1i128];
    for j in 0..n {
        let mut next = vec![0i128; p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i + 1] += c;
            next[i] += c * j as i128;
        }
        p = next;
    }
    p
}

/// Triangles by one-step recurrences, symbolic (`q`) or classical (`q = 1`).
#[derive(Debug, Clone, Copy)]
pub enum Triangle {
    Binomial,
    Stirling2,
    Stirling1,
}

pub fn triangle(kind: Triangle, rows: usize, symbolic: bool) -> Vec<Vec<Scalar>> {
    let qn = |j: usize| {
        if symbolic {
            (0..j).map(Scalar::q_pow).sum()
        } else {
            int(j as i64)
        }
    };
    let qp = |j: usize| if symbolic { Scalar::q_pow(j) } else { Scalar::one() };
    let mut t = vec![vec![Scalar::one()]];
    for n in 1..=rows {
        let at = |k: usize| t[n - 1].get(k).cloned().unwrap_or_else(Scalar::zero);
        let row: Vec<Scalar> = (0..=n)
            .map(|k| {
                let left = if k == 0 { Scalar::zero() } else { at(k - 1) };
                let factor = match kind {
                    Triangle::Binomial => qp(k),
                    Triangle::Stirling2 => qn(k),
                    Triangle::Stirling1 => qn(n - 1),
                };
                left + factor * at(k)
            })
            .collect();
        t.push(row);
    }
    t
}

/// Set partitions of `{1..n}` by block count, returned both plainly counted
/// (`{n k}`) and weighted by `prod (|B|-1)!`, which counts permutations by
/// cycle count (`[n k]`): each block of size `s` carries `(s-1)!` cycles.
pub fn partition_enumeration(n: usize) -> (Vec<i128>, Vec<i128>) {
    let mut plain = vec![0i128; n + 1];
    let mut cyclic = vec![0i128; n + 1];
    if n == 0 {
        plain[0] = 1;
        cyclic[0] = 1;
        return (plain, cyclic);
    }
    let fact: Vec<i128> = (0..=n as i128).scan(1i128, |acc, j| {
        let v = *acc;
        *acc *= j + 1;
        Some(v)
    }).collect();
    let mut a = vec![0usize; n];
    let mut sizes = vec![0usize; n];
    loop {
        sizes.iter_mut().for_each(|s| *s = 0);
        let mut blocks = 0;
        for &b in &a {
            sizes[b] += 1;
            blocks = blocks.max(b + 1);
        }
        plain[blocks] += 1;
        cyclic[blocks] += sizes[..blocks].iter().map(|&s| fact[s - 1]).product::<i128>();
        let mut i = n - 1;
        loop {
            if i == 0 {
                return (plain, cyclic);
            }
            let bound = a[..i].iter().max().unwrap() + 1;
            if a[i] < bound {
                a[i] += 1;
                for x in &mut a[i + 1..] {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}
