//! Order-3 radical at x = 1, which converges to 2 from below.
//!
//! Prints the sweep as CSV and writes `cube_sweep.svg` to the current
//! directory (or to the path given as the first argument).

use radix::radical::{depth_sweep, GeneralSpec, TailPolicy};
use radix::report::{rows_from_results, to_csv, to_svg, DEFAULT_DIGITS};
use radix::BigRat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = GeneralSpec::new(3, BigRat::from_integer(1.into()))?;
    let results = depth_sweep(&spec, 8, &TailPolicy::Zero, 128)?;
    let rows = rows_from_results(&results, DEFAULT_DIGITS);

    print!("{}", to_csv(&rows));

    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "cube_sweep.svg".to_string());
    std::fs::write(&path, to_svg(&rows, &BigRat::from_integer(2.into()))?)?;
    eprintln!("wrote {path}");
    Ok(())
}
