use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact `B_0 .. B_{count−1}` with `B_1 = −1/2`.
pub fn bernoulli_numbers(count: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(count);
    // binomial row C(m+1, k), updated in place
    let mut row: Vec<BigInt> = alloc::vec![BigInt::one()];
    for m in 0..count {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for k in 1..row.len() {
            next.push(&row[k - 1] + &row[k]);
        }
        next.push(BigInt::one());
        row = next;
        if m == 0 {
            b.push(BigRational::one());
            continue;
        }
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += bk * BigRational::from_integer(row[k].clone());
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}
