#![allow(dead_code)]

use bsposet::{poset, BSBounds, Limits};

/// Strictly increasing sequences of length `len` with entries in `[0, max]`.
pub fn sequences(len: usize, max: i64) -> Vec<Vec<i64>> {
    fn rec(cur: &mut Vec<i64>, len: usize, max: i64, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().map_or(0, |x| x + 1);
        for v in start..=max {
            cur.push(v);
            rec(cur, len, max, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), len, max, &mut out);
    out
}

/// Every bounds pair of length at most 4 with entries in `[0, 6]`,
/// translated so that `lower_0 = 0`, whose poset has at most 200 elements.
pub fn grid() -> Vec<BSBounds> {
    let limits = Limits { max_elements: 200, ..Limits::default() };
    let mut out = Vec::new();
    for len in 1..=4 {
        let all = sequences(len, 6);
        for lo in all.iter().filter(|s| s[0] == 0) {
            for hi in &all {
                if let Ok(b) = BSBounds::from_vecs(lo.clone(), hi.clone()) {
                    if poset::enumerate_with(&b, &limits).is_ok() {
                        out.push(b);
                    }
                }
            }
        }
    }
    out
}

pub fn consecutive(p: i64, k: i64) -> BSBounds {
    BSBounds::from_vecs((0..=p).collect(), (k..=p + k).collect()).unwrap()
}
