//! Closed-form values for named families.
//!
//! Identifiers ending in `_inline` are expressions quoted from proofs rather
//! than established identities; they are compared against the engine and any
//! disagreement is reported as a finding, never trusted.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub const FAMILIES: &[&str] = &[
    "n_path",
    "n_cycle",
    "n_star",
    "nk_path",
    "nk_cycle",
    "nk_star",
    "n_us",
    "n_up_inline",
    "n_cycle_rooted",
    "n_u1_two",
    "n_u2_two",
    "n_u1_two_rooted",
    "n_u2_two_rooted",
    "n_u22_inline",
    "n_u21_inline",
    "n_u22_rooted_inline",
    "n_u21_rooted_inline",
    "n_girth4_inline",
    "n_u1n_inline",
    "fibonacci",
    "sigma_path",
    "sigma_two_paths",
    "hosoya_path",
];

/// `F_k` with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci(k: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..k {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn require(cond: bool, family: &str, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("{family}: requires {what}")))
    }
}

fn arity(family: &str, params: &[u64], k: usize) -> Result<()> {
    require(params.len() == k, family, &format!("{k} parameter(s), got {}", params.len()))
}

fn path_total(n: u64) -> BigUint {
    BigUint::from((n * n + n + 2) / 2)
}

/// Evaluate `family` at `params`, exactly.
pub fn closed_form(family: &str, params: &[u64]) -> Result<BigUint> {
    if !FAMILIES.contains(&family) {
        return Err(Error::UnknownFamily(family.to_string()));
    }
    let one_param = |min: u64| -> Result<u64> {
        arity(family, params, 1)?;
        require(params[0] >= min, family, &format!("n >= {min}"))?;
        Ok(params[0])
    };
    let two_seg = || -> Result<(u64, u64)> {
        arity(family, params, 2)?;
        let (l1, l2) = (params[0], params[1]);
        require(l1 >= l2 && l2 >= 1 && l1 >= 3, family, "l1 >= l2 >= 1 and l1 >= 3")?;
        Ok((l1, l2))
    };
    let value = match family {
        "n_path" => path_total(one_param(1)?),
        "n_cycle" => {
            let n = one_param(3)?;
            BigUint::from(n * n + 1)
        }
        "n_star" => {
            let n = one_param(1)?;
            BigUint::from(n) + pow2(n - 1)
        }
        "nk_path" | "nk_cycle" | "nk_star" => {
            arity(family, params, 2)?;
            let (n, k) = (params[0], params[1]);
            match family {
                "nk_path" => {
                    require(n >= k && k >= 1, family, "n >= k >= 1")?;
                    BigUint::from(n - k + 1)
                }
                "nk_cycle" => {
                    require(n >= 3 && n >= k && k >= 1, family, "n >= 3 and n >= k >= 1")?;
                    BigUint::from(n)
                }
                _ => {
                    require(n >= k && k >= 2, family, "n >= k >= 2")?;
                    binomial(n - 1, k - 1)
                }
            }
        }
        "n_us" => {
            let n = one_param(4)?;
            pow2(n - 1) + pow2(n - 2) + BigUint::from(n + 1)
        }
        "n_up_inline" => {
            let n = one_param(4)?;
            BigUint::from((n * n + 7 * n - 16) / 2)
        }
        "n_cycle_rooted" => {
            let n = one_param(3)?;
            BigUint::from((n * n + n) / 2)
        }
        "n_u1_two" => {
            let (l1, l2) = two_seg()?;
            path_total(l1 + l2) + BigUint::from((l1 * l1 * l2 - l1 * l2 + l1 * l1 - l1) / 2)
        }
        "n_u2_two" => {
            let (l1, l2) = two_seg()?;
            require(l2 >= 3, family, "l2 >= 3")?;
            path_total(l1 + l2) + BigUint::from((l1 * l2 * l2 - l1 * l2 + l2 * l2 - l2) / 2)
        }
        "n_u1_two_rooted" => {
            let (l1, l2) = two_seg()?;
            BigUint::from((l2 + 1) * (l1 + 1) * l1 / 2)
        }
        "n_u2_two_rooted" => {
            let (l1, l2) = two_seg()?;
            require(l2 >= 3, family, "l2 >= 3")?;
            BigUint::from((l1 + 1) * (l2 + 1) * l2 / 2)
        }
        "n_u22_inline" => {
            let l = one_param(1)?;
            BigUint::from((l * l + 33 * l + 54) / 2)
        }
        "n_u21_inline" => {
            let l = one_param(1)?;
            BigUint::from((l * l + 29 * l + 50) / 2)
        }
        "n_u22_rooted_inline" => BigUint::from(16 * (one_param(1)? + 1)),
        "n_u21_rooted_inline" => BigUint::from(14 * (one_param(1)? + 1)),
        "n_girth4_inline" => {
            let n = one_param(8)?;
            BigUint::from(12u32) * pow2(n - 5) + pow2(n - 7) + BigUint::from(n + 19)
        }
        "n_u1n_inline" => {
            let n = one_param(6)?;
            BigUint::from(n + 6) + BigUint::from(17u32) * pow2(n - 5)
        }
        "fibonacci" => fibonacci(one_param(0)?),
        "sigma_path" => fibonacci(one_param(0)? + 2),
        "hosoya_path" => fibonacci(one_param(0)? + 1),
        "sigma_two_paths" => {
            arity(family, params, 2)?;
            fibonacci(params[0] + 2) * fibonacci(params[1] + 2)
        }
        _ => unreachable!("family list checked above"),
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(f: &str, p: &[u64]) -> u64 {
        closed_form(f, p).unwrap().try_into().unwrap()
    }

    #[test]
    fn catalog_values() {
        assert_eq!(cf("n_path", &[6]), 22);
        assert_eq!(cf("n_us", &[6]), 55);
        assert_eq!(cf("sigma_path", &[5]), 13);
        assert_eq!(cf("n_cycle", &[5]), 26);
        assert_eq!(cf("n_star", &[5]), 21);
        assert_eq!(cf("nk_star", &[5, 3]), 6);
        assert_eq!(cf("n_u1_two_rooted", &[4, 3]), 40);
        assert_eq!(cf("n_up_inline", &[5]), 22);
        assert_eq!(cf("sigma_two_paths", &[3, 3]), 25);
        assert_eq!(cf("fibonacci", &[0]), 0);
        assert_eq!(cf("fibonacci", &[2]), 1);
    }

    #[test]
    fn errors() {
        assert_eq!(closed_form("n_tadpole", &[3]), Err(Error::UnknownFamily("n_tadpole".into())));
        assert!(matches!(closed_form("n_cycle", &[2]), Err(Error::OutOfRange(_))));
        assert!(matches!(closed_form("n_path", &[]), Err(Error::OutOfRange(_))));
        assert!(matches!(closed_form("nk_path", &[3, 4]), Err(Error::OutOfRange(_))));
    }
}
