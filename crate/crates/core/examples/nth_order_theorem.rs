//! Every order n and start x >= 1 gives x + 1, checked with the exact tail
//! and bracketed with the zero tail and the scaled bound.

use radix::radical::{enclose, truncated_eval, GeneralSpec, TailPolicy};
use radix::BigRat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let starts = [
        BigRat::from_integer(1.into()),
        BigRat::new(3.into(), 2.into()),
        BigRat::from_integer(10.into()),
    ];
    for order in 2..=7 {
        for x in &starts {
            let spec = GeneralSpec::new(order, x.clone())?;
            let limit = x + BigRat::from_integer(1.into());
            let exact = truncated_eval(&spec, 6, &TailPolicy::ExactFixedPoint, 128)?;
            let bracket = enclose(&spec, 6, 128)?;
            println!(
                "n={order} x={x:<4} exact tail contains {limit}: {:<5}  enclosure [{:.10}, {:.10}] {}",
                exact.value.contains(&limit),
                bracket.interval.lo().to_f64(),
                bracket.interval.hi().to_f64(),
                if bracket.is_rigorous() { "rigorous" } else { "conditional" },
            );
        }
    }
    Ok(())
}
