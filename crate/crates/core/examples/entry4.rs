//! The three-parameter family with limit x + n' + a.

use radix::radical::{truncated_eval, Entry4Spec, LayerSource, TailPolicy};
use radix::BigRat;

fn int(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (x, nprime, a) in [(2, 1, 0), (1, 1, 1), (0, 5, 1), (3, 2, 4)] {
        let spec = Entry4Spec::new(int(x), int(nprime), int(a));
        let limit = spec.limit();
        let lower = truncated_eval(&spec, 12, &TailPolicy::Zero, 128)?;
        let fixed = truncated_eval(&spec, 12, &TailPolicy::ExactFixedPoint, 128)?;
        println!(
            "(x, n', a) = ({x}, {nprime}, {a})  limit {limit}  zero tail {:.12}  fixed tail contains limit: {}",
            lower.value.lo().to_f64(),
            fixed.value.contains(&limit)
        );
    }

    let bad = Entry4Spec::new(int(1), int(1), int(-3));
    match truncated_eval(&bad, 2, &TailPolicy::Zero, 128) {
        Ok(r) => println!("unexpected value {}", r.value),
        Err(err) => println!("(1, 1, -3): {err}"),
    }
    Ok(())
}
