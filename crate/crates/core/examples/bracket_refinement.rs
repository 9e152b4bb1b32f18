//! Each pass of the functional equation divides the bracket exponent by the
//! order, so `2^(-q_k) (x + 1) <= f(x) <= 2^(q_k) (x + 1)` closes in on x + 1.

use radix::radical::refine_bracket;
use radix::BigRat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = BigRat::from_integer(1.into());
    for k in 0..=8 {
        let bracket = refine_bracket(3, k)?;
        let around = bracket.bracket_at(&x, 64)?;
        println!(
            "k={k}  q={:<8} f(1) in [{:.12}, {:.12}]",
            bracket.hi_exponent.to_string(),
            around.lo().to_f64(),
            around.hi().to_f64()
        );
    }
    Ok(())
}
