//! Exhaustive checks of the braid-word identities under a local action.

use super::{same_local_action, Braiding};
use crate::braid::{bracket, nu, nu_descending, range_word, shuffles, star, BraidWord};
use crate::report::{first_failure, Report};
use crate::Error;

type Outcome = Result<(), String>;

fn compare(b: &Braiding, what: String, lhs: &BraidWord, rhs: &BraidWord) -> Outcome {
    match same_local_action(b, lhs, rhs) {
        None => Ok(()),
        Some(w) => Err(format!(
            "{what} on [{}]: {} vs {}",
            super::format_word(&w),
            super::format_assoc(&b.apply_letters(lhs.letters(), &w)),
            super::format_assoc(&b.apply_letters(rhs.letters(), &w))
        )),
    }
}

fn cat(n: usize, words: &[&BraidWord]) -> BraidWord {
    let widened: Vec<BraidWord> = words
        .iter()
        .map(|w| w.widen(n).expect("factor fits"))
        .collect();
    crate::braid::concat(n, &widened).expect("same strand count")
}

fn rw(m: usize, k: usize, n: usize) -> BraidWord {
    range_word(m, k, n).expect("indices in range")
}

/// `[m;k][r;s] = [r;s][m;k]` for `r ≤ s < m ≤ k`.
pub fn disjoint_ranges_commute(b: &Braiding, n: usize) -> Outcome {
    let idx = || 1..=n;
    first_failure(
        idx().flat_map(|r| {
            idx().flat_map(move |s| idx().flat_map(move |m| idx().map(move |k| (r, s, m, k))))
        }),
        |(r, s, m, k)| {
            if !(r <= s && s < m && m <= k) {
                return Ok(());
            }
            let lhs = cat(n, &[&rw(m, k, n), &rw(r, s, n)]);
            let rhs = cat(n, &[&rw(r, s, n), &rw(m, k, n)]);
            compare(b, format!("[{m};{k}][{r};{s}], n={n}"), &lhs, &rhs)
        },
    )
}

/// `[m;k][r;m] = [r;k]` for `r ≤ m ≤ k`.
pub fn adjacent_ranges_join(b: &Braiding, n: usize) -> Outcome {
    first_failure(
        (1..=n).flat_map(|r| (r..=n).flat_map(move |m| (m..=n).map(move |k| (r, m, k)))),
        |(r, m, k)| {
            let lhs = cat(n, &[&rw(m, k, n), &rw(r, m, n)]);
            compare(b, format!("[{m};{k}][{r};{m}], n={n}"), &lhs, &rw(r, k, n))
        },
    )
}

/// `[m-1;r-1][k;t] = [k;t][m;r]` for `k ≤ m ≤ r ≤ t`.
///
/// With `k = m < r` the two sides differ already for the flip, so the check
/// covers `k < m` and the trivial `m = r`. [`nested_range_boundary`] exhibits
/// the failing boundary case.
pub fn nested_range_slide(b: &Braiding, n: usize) -> Outcome {
    first_failure(
        (1..=n).flat_map(|k| {
            (k.max(2)..=n)
                .flat_map(move |m| (m..=n).flat_map(move |r| (r..=n).map(move |t| (k, m, r, t))))
        }),
        |(k, m, r, t)| {
            if k == m && m != r {
                return Ok(());
            }
            let lhs = cat(n, &[&rw(m - 1, r - 1, n), &rw(k, t, n)]);
            let rhs = cat(n, &[&rw(k, t, n), &rw(m, r, n)]);
            compare(
                b,
                format!("[{}:{}][{k};{t}], n={n}", m - 1, r - 1),
                &lhs,
                &rhs,
            )
        },
    )
}

/// The boundary instance `k = m = 2`, `r = t = 3` of the sliding rule.
///
/// Returns the two sides `[1;2][2;3]` and `[2;3][2;3]` on three strands.
pub fn nested_range_boundary() -> (BraidWord, BraidWord) {
    let lhs = cat(3, &[&rw(1, 2, 3), &rw(2, 3, 3)]);
    let rhs = cat(3, &[&rw(2, 3, 3), &rw(2, 3, 3)]);
    (lhs, rhs)
}

/// Ascending and descending factorizations of the block transposition agree.
pub fn block_move_factorizations(b: &Braiding, n: usize) -> Outcome {
    first_failure(
        (1..n).flat_map(|r| (1..=r).map(move |k| (r, k))),
        |(r, k)| {
            let lhs = nu(r, k, n).map_err(|e| e.to_string())?;
            let rhs = nu_descending(r, k, n).map_err(|e| e.to_string())?;
            compare(b, format!("nu({r},{k},{n}) factorizations"), &lhs, &rhs)
        },
    )
}

/// Composition of block transpositions, both ways round.
pub fn block_move_composition(b: &Braiding, n: usize) -> Outcome {
    let target = |r, t| nu(r, t, n).expect("valid block move");
    // nu(r,t,m) nu(m, m-r+t, n) = nu(r,t,n) for t ≤ r < m < n
    first_failure(
        (1..n).flat_map(|t| (t..n).flat_map(move |r| (r + 1..n).map(move |m| (t, r, m)))),
        |(t, r, m)| {
            let lhs = cat(n, &[&nu(r, t, m).unwrap(), &nu(m, m - r + t, n).unwrap()]);
            compare(
                b,
                format!("nu({r},{t},{m}) nu({m},{},{n})", m - r + t),
                &lhs,
                &target(r, t),
            )
        },
    )?;
    // nu(r,s+1,n) nu(s,t,n-r+s) = nu(r,t,n) for t ≤ s < r < n
    first_failure(
        (1..n).flat_map(|t| (t..n).flat_map(move |s| (s + 1..n).map(move |r| (t, s, r)))),
        |(t, s, r)| {
            let lhs = cat(
                n,
                &[&nu(r, s + 1, n).unwrap(), &nu(s, t, n - r + s).unwrap()],
            );
            compare(
                b,
                format!("nu({r},{},{n}) nu({s},{t},{})", s + 1, n - r + s),
                &lhs,
                &target(r, t),
            )
        },
    )
}

/// `[π] ν_r^{1,n} = ν_r^{1,n} [π]_(n-r)` for every `π ∈ Sh_r^s`.
pub fn shuffle_passes_block_move(b: &Braiding, n: usize) -> Outcome {
    first_failure(
        (1..n).flat_map(|r| {
            (0..=r).flat_map(move |s| shuffles(r, s).into_iter().map(move |p| (r, p)))
        }),
        |(r, pi)| {
            let v = nu(r, 1, n).unwrap();
            let lhs = cat(n, &[&bracket(&pi), &v]);
            let shifted = bracket(&pi).shift(n - r, n).unwrap();
            let rhs = cat(n, &[&v, &shifted]);
            compare(
                b,
                format!("shuffle {:?} in Sh_{r}, n={n}", pi.image()),
                &lhs,
                &rhs,
            )
        },
    )
}

/// `[σ][δ]_(s) ν_s^{r+1,p+s} = [σ*δ]` for `σ ∈ Sh_s^r`, `δ ∈ Sh_t^p`, `s + t = n`.
pub fn star_of_shuffles(b: &Braiding, n: usize) -> Outcome {
    let cases = (1..n).flat_map(move |s| {
        let t = n - s;
        (0..=s).flat_map(move |r| {
            (0..=t).flat_map(move |p| {
                shuffles(s, r).into_iter().flat_map(move |sigma| {
                    shuffles(t, p)
                        .into_iter()
                        .map(move |delta| (s, sigma.clone(), delta))
                })
            })
        })
    });
    first_failure(cases, |(s, sigma, delta)| {
        let r = sigma.r();
        let p = delta.r();
        let lhs = cat(
            n,
            &[
                &bracket(&sigma),
                &bracket(&delta).shift(s, n).unwrap(),
                &nu(s, r + 1, p + s).unwrap(),
            ],
        );
        let rhs = bracket(&star(&sigma, &delta));
        compare(
            b,
            format!(
                "star of {:?} in Sh_{s} and {:?} in Sh_{}",
                sigma.image(),
                delta.image(),
                n - s
            ),
            &lhs,
            &rhs,
        )
    })
}

/// Runs every braid-word identity on `2..=max_strands` strands.
pub fn verify_braid_calculus(b: &Braiding, max_strands: usize) -> Result<Report, Error> {
    if max_strands < 2 {
        return Err(Error::Braid("at least two strands are needed".into()));
    }
    type Check = fn(&Braiding, usize) -> Outcome;
    let checks: [(&str, Check); 7] = [
        ("disjoint-ranges-commute", disjoint_ranges_commute),
        ("adjacent-ranges-join", adjacent_ranges_join),
        ("nested-range-slide", nested_range_slide),
        ("block-move-factorizations", block_move_factorizations),
        ("block-move-composition", block_move_composition),
        ("shuffle-passes-block-move", shuffle_passes_block_move),
        ("star-of-shuffles", star_of_shuffles),
    ];
    let mut report = Report::new();
    for (name, check) in checks {
        report.record(name, (2..=max_strands).try_for_each(|n| check(b, n)));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_case_of_sliding_rule_fails_for_flip() {
        let (lhs, rhs) = nested_range_boundary();
        assert_eq!(lhs.letters(), &[1, 2]);
        assert_eq!(rhs.letters(), &[2, 2]);
        assert!(same_local_action(&Braiding::flip(3), &lhs, &rhs).is_some());
    }

    #[test]
    fn flip_passes_small_calculus() {
        let r = verify_braid_calculus(&Braiding::flip(2), 4).unwrap();
        assert!(r.all_pass(), "{}", r.to_text());
    }
}
