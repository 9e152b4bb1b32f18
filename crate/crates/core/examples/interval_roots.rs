//! Directed-rounding intervals: correctly rounded roots and exact rational
//! inputs at several precisions.

use radix::numeric::Interval;
use radix::BigRat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let two = BigRat::from_integer(2.into());
    for precision in [16, 53, 128, 256] {
        let root = Interval::from_rational(&two, precision).nth_root(2)?;
        println!(
            "sqrt(2) at {precision:>3} bits: [{}, {}]",
            root.lo(),
            root.hi()
        );
    }

    let third = BigRat::new(1.into(), 3.into());
    let i = Interval::from_rational(&third, 64);
    let cubed = i.pow(3);
    println!(
        "(1/3)^3 in [{:.20e}, {:.20e}]",
        cubed.lo().to_f64(),
        cubed.hi().to_f64()
    );

    let negative = Interval::from_rational(&BigRat::from_integer((-1).into()), 64);
    if let Err(err) = negative.nth_root(3) {
        println!("cube root of -1: {err}");
    }
    Ok(())
}
