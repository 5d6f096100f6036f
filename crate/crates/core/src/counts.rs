//! Closed-form counts of independent r-set families and the theorem bounds
//! built from them. All arithmetic is checked; overflow is an error, never a
//! wrap.

use crate::error::{Error, Result};

fn overflow(what: impl Into<String>) -> Error {
    Error::CountOverflow(what.into())
}

pub fn binomial(n: usize, r: usize) -> Result<u64> {
    if r > n {
        return Ok(0);
    }
    let r = r.min(n - r);
    let mut acc: u64 = 1;
    for i in 0..r {
        // exact at every step: acc holds C(n, i) before the update
        acc = acc
            .checked_mul((n - i) as u64)
            .ok_or_else(|| overflow(format!("C({n},{r})")))?
            / (i as u64 + 1);
    }
    Ok(acc)
}

pub fn pow2(e: usize) -> Result<u64> {
    if e >= 64 {
        return Err(overflow(format!("2^{e}")));
    }
    Ok(1u64 << e)
}

fn checked_mul(a: u64, b: u64, what: &str) -> Result<u64> {
    a.checked_mul(b).ok_or_else(|| overflow(what.to_string()))
}

fn checked_add(a: u64, b: u64, what: &str) -> Result<u64> {
    a.checked_add(b).ok_or_else(|| overflow(what.to_string()))
}

/// |J^r| of the empty graph on n vertices: C(n, r).
pub fn empty_count(n: usize, r: usize) -> Result<u64> {
    binomial(n, r)
}

/// |J^r| of the perfect matching on 2n vertices: C(n, r) * 2^r.
pub fn matching_count(n: usize, r: usize) -> Result<u64> {
    if r > n {
        return Ok(0);
    }
    checked_mul(binomial(n, r)?, pow2(r)?, "matching count")
}

/// |J^r| of the cycle on n vertices, by the two-step contraction recurrence
/// `count(n, r) = count(n-1, r) + count(n-2, r-1)` anchored at the n = 2, 3
/// base cases (with the 2-cycle a solitary edge).
pub fn cycle_count(n: usize, r: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidParams("cycle count needs n >= 2".into()));
    }
    fn base(n: usize, r: usize) -> u64 {
        match (n, r) {
            (_, 0) => 1,
            (2, 1) => 2,
            (3, 1) => 3,
            _ => 0,
        }
    }
    if n <= 3 {
        return Ok(base(n, r));
    }
    // table[m][s] = |J^s(C_{m})| for m in 2..=n, s in 0..=r
    let mut prev2: Vec<u64> = (0..=r).map(|s| base(2, s)).collect();
    let mut prev1: Vec<u64> = (0..=r).map(|s| base(3, s)).collect();
    for _ in 4..=n {
        let mut cur = vec![0u64; r + 1];
        cur[0] = 1;
        for s in 1..=r {
            cur[s] = checked_add(prev1[s], prev2[s - 1], "cycle count")?;
        }
        prev2 = std::mem::replace(&mut prev1, cur);
    }
    let _ = prev2;
    Ok(prev1[r])
}

/// |J^r| of a disjoint union of cliques: the elementary symmetric polynomial
/// e_r of the component sizes (choose r components, one vertex from each).
/// This formula is validated against direct enumeration by the test suite and
/// by every report that uses it.
pub fn clique_union_count(sizes: &[usize], r: usize) -> Result<u64> {
    if r > sizes.len() {
        return Ok(0);
    }
    // e[j] after processing a prefix of sizes
    let mut e = vec![0u64; r + 1];
    e[0] = 1;
    for &s in sizes {
        for j in (1..=r).rev() {
            let add = checked_mul(e[j - 1], s as u64, "clique union count")?;
            e[j] = checked_add(e[j], add, "clique union count")?;
        }
    }
    Ok(e[r])
}

/// Which side of the threshold a cross-sum bound was taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundBranch {
    BelowThreshold,
    AtThreshold,
    AboveThreshold,
}

impl BoundBranch {
    pub fn describe(self, threshold: &str) -> String {
        match self {
            BoundBranch::BelowThreshold => format!("k < {threshold}"),
            BoundBranch::AtThreshold => format!("k = {threshold}"),
            BoundBranch::AboveThreshold => format!("k > {threshold}"),
        }
    }
}

/// Largest sum of k cross-intersecting r-uniform families of subsets of [n]:
/// C(n, r) up to the threshold k = n/r, then k * C(n-1, r-1); the two
/// expressions agree exactly at the threshold.
pub fn hilton_bound(n: usize, r: usize, k: usize) -> Result<(u64, BoundBranch)> {
    if r == 0 || k < 2 {
        return Err(Error::InvalidParams("hilton bound needs r >= 1, k >= 2".into()));
    }
    let branch = match (k * r).cmp(&n) {
        std::cmp::Ordering::Less => BoundBranch::BelowThreshold,
        std::cmp::Ordering::Equal => BoundBranch::AtThreshold,
        std::cmp::Ordering::Greater => BoundBranch::AboveThreshold,
    };
    let bound = match branch {
        BoundBranch::BelowThreshold | BoundBranch::AtThreshold => binomial(n, r)?,
        BoundBranch::AboveThreshold => {
            checked_mul(k as u64, binomial(n - 1, r - 1)?, "hilton bound")?
        }
    };
    Ok((bound, branch))
}

/// The matching analogue: C(n, r) * 2^r up to the threshold k = 2n/r, then
/// k * C(n-1, r-1) * 2^(r-1); again equal at the threshold.
pub fn borg_leader_bound(n: usize, r: usize, k: usize) -> Result<(u64, BoundBranch)> {
    if r == 0 || k < 2 {
        return Err(Error::InvalidParams(
            "borg-leader bound needs r >= 1, k >= 2".into(),
        ));
    }
    let branch = match (k * r).cmp(&(2 * n)) {
        std::cmp::Ordering::Less => BoundBranch::BelowThreshold,
        std::cmp::Ordering::Equal => BoundBranch::AtThreshold,
        std::cmp::Ordering::Greater => BoundBranch::AboveThreshold,
    };
    let bound = match branch {
        BoundBranch::BelowThreshold | BoundBranch::AtThreshold => matching_count(n, r)?,
        BoundBranch::AboveThreshold => checked_mul(
            checked_mul(k as u64, binomial(n - 1, r - 1)?, "borg-leader bound")?,
            pow2(r - 1)?,
            "borg-leader bound",
        )?,
    };
    Ok((bound, branch))
}

/// Largest intersecting subfamily of J^r(M_n): 2^(r-1) * C(n-1, r-1).
pub fn bollobas_leader_bound(n: usize, r: usize) -> Result<u64> {
    if r == 0 || r > n {
        return Err(Error::InvalidParams(
            "bollobas-leader bound needs 1 <= r <= n".into(),
        ));
    }
    checked_mul(pow2(r - 1)?, binomial(n - 1, r - 1)?, "bollobas-leader bound")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2).unwrap(), 6);
        assert_eq!(binomial(6, 0).unwrap(), 1);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(binomial(52, 5).unwrap(), 2_598_960);
    }

    #[test]
    fn named_counts() {
        assert_eq!(matching_count(3, 2).unwrap(), 12);
        assert_eq!(matching_count(3, 3).unwrap(), 8);
        assert_eq!(cycle_count(5, 2).unwrap(), 5);
        assert_eq!(cycle_count(4, 2).unwrap(), 2);
        assert_eq!(cycle_count(7, 3).unwrap(), 7);
        assert_eq!(cycle_count(2, 1).unwrap(), 2);
        assert_eq!(cycle_count(6, 2).unwrap(), 9);
        assert_eq!(clique_union_count(&[2, 3], 2).unwrap(), 6);
        assert_eq!(clique_union_count(&[2, 2, 2], 2).unwrap(), 12);
        assert_eq!(clique_union_count(&[3, 3], 1).unwrap(), 6);
        assert_eq!(clique_union_count(&[2, 3], 3).unwrap(), 0);
    }

    #[test]
    fn bound_branches() {
        // threshold k = n/r: both expressions agree
        let (b, br) = hilton_bound(4, 2, 2).unwrap();
        assert_eq!((b, br), (6, BoundBranch::AtThreshold));
        let (b, br) = hilton_bound(4, 2, 3).unwrap();
        assert_eq!((b, br), (9, BoundBranch::AboveThreshold));
        let (b, br) = hilton_bound(6, 2, 5).unwrap();
        assert_eq!((b, br), (25, BoundBranch::AboveThreshold));
        let (b, br) = hilton_bound(6, 2, 2).unwrap();
        assert_eq!((b, br), (15, BoundBranch::BelowThreshold));

        let (b, br) = borg_leader_bound(3, 2, 2).unwrap();
        assert_eq!((b, br), (12, BoundBranch::BelowThreshold));
        let (b, br) = borg_leader_bound(3, 2, 3).unwrap();
        assert_eq!((b, br), (12, BoundBranch::AtThreshold));
        let (b, br) = borg_leader_bound(2, 1, 2).unwrap();
        assert_eq!((b, br), (4, BoundBranch::BelowThreshold));

        assert_eq!(bollobas_leader_bound(3, 2).unwrap(), 4);
        assert_eq!(bollobas_leader_bound(2, 2).unwrap(), 2);
        assert_eq!(bollobas_leader_bound(4, 1).unwrap(), 1);
    }

    #[test]
    fn threshold_expressions_agree() {
        // wherever k sits exactly on the threshold the two branch formulas
        // must evaluate identically
        for n in 2..=12 {
            for r in 1..=n / 2 {
                if n % r == 0 && n / r >= 2 {
                    let k = n / r;
                    let full = binomial(n, r).unwrap();
                    let star = k as u64 * binomial(n - 1, r - 1).unwrap();
                    assert_eq!(full, star, "hilton threshold n={n} r={r}");
                }
            }
        }
        for n in 1..=8 {
            for r in 1..=n {
                if (2 * n) % r == 0 && 2 * n / r >= 2 {
                    let k = 2 * n / r;
                    let full = matching_count(n, r).unwrap();
                    let star =
                        k as u64 * binomial(n - 1, r - 1).unwrap() * pow2(r - 1).unwrap();
                    assert_eq!(full, star, "matching threshold n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn overflow_is_detected() {
        assert!(matches!(
            matching_count(64, 32),
            Err(Error::CountOverflow(_))
        ));
        assert!(pow2(64).is_err());
    }
}
