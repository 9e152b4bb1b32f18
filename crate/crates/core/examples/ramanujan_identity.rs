//! The square-root radical `sqrt(1 + 2 sqrt(1 + 3 sqrt(1 + ...)))` = 3.
//!
//! Run with `cargo run --example ramanujan_identity`.

use radix::radical::{truncated_eval, GeneralSpec, TailPolicy};
use radix::BigRat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = GeneralSpec::new(2, BigRat::from_integer(2.into()))?;
    let three = BigRat::from_integer(3.into());

    println!("depth  zero-tail lower          fixed tail contains 3");
    for depth in [1, 2, 4, 8, 16, 32] {
        let lower = truncated_eval(&spec, depth, &TailPolicy::Zero, 128)?;
        let fixed = truncated_eval(&spec, depth, &TailPolicy::ExactFixedPoint, 128)?;
        println!(
            "{depth:>5}  {:<24} {}",
            format!("{:.20}", lower.value.lo().to_f64()),
            fixed.value.contains(&three)
        );
    }
    Ok(())
}
