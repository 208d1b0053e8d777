//! Lyndon words, standard factorization, and the Witt dimension formula.

use super::super::trees::{Alphabet, RootedTree};

pub type Word = Vec<u8>;

/// A word is Lyndon when it is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Lyndon words of length exactly `n` over `m` letters, in lexicographic order.
pub fn lyndon_words(n: usize, m: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if n == 0 || m == 0 {
        return out;
    }
    let top = (m - 1) as u8;
    let mut w: Word = vec![0];
    loop {
        if w.len() == n {
            out.push(w.clone());
        }
        let k = w.len();
        while w.len() < n {
            w.push(w[w.len() - k]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(x) => *x += 1,
            None => break,
        }
    }
    out
}

/// `w = u v` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> (&[u8], &[u8]) {
    assert!(w.len() >= 2, "factorization needs a word of length >= 2");
    let i = (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .expect("the last letter is Lyndon");
    (&w[..i], &w[i..])
}

/// The standard bracketing of a Lyndon word as a rooted tree.
pub fn standard_bracket(w: &[u8], alphabet: Alphabet) -> RootedTree {
    if w.len() == 1 {
        return RootedTree::Leaf(alphabet.label(w[0] as usize));
    }
    let (u, v) = standard_factorization(w);
    RootedTree::node(standard_bracket(u, alphabet), standard_bracket(v, alphabet))
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Rank of the degree `n` part of the free Lie algebra on `m` generators.
pub fn witt_rank(n: u32, m: u64) -> u128 {
    assert!(n >= 1, "degree starts at 1");
    let mut total: i128 = 0;
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        total += mobius(d as u64) as i128 * (m as i128).pow(n / d);
    }
    (total / n as i128) as u128
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_agrees_with_filter() {
        for m in 1usize..=3 {
            for n in 1..=7 {
                let all: Vec<Word> = (0..m.pow(n as u32))
                    .map(|mut k| {
                        let mut w = vec![0u8; n];
                        for x in w.iter_mut().rev() {
                            *x = (k % m) as u8;
                            k /= m;
                        }
                        w
                    })
                    .filter(|w| is_lyndon(w))
                    .collect();
                assert_eq!(lyndon_words(n, m), all);
            }
        }
    }

    #[test]
    fn factorization() {
        assert_eq!(standard_factorization(&[0, 0, 1]), (&[0][..], &[0, 1][..]));
        assert_eq!(standard_factorization(&[0, 1, 1]), (&[0, 1][..], &[1][..]));
        let t = standard_bracket(&[0, 0, 1], Alphabet::Strands(2));
        assert_eq!(t.to_string(), "(1,(1,2))");
    }
}
