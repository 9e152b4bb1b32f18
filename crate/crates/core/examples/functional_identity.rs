//! Exact polynomial checks: the functional identity, the degree of a
//! polynomial solution, and the linear ansatz for order 3.

use radix::algebra::{
    functional_identity_check, functional_rhs, infer_degree, layer_constant_poly,
    solve_linear_ansatz,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=5 {
        println!("C_{n}(x) = {}", layer_constant_poly(n)?);
        println!("  C_{n}(x) + x^{}(x + {n}) = {}", n - 1, functional_rhs(n)?);
    }

    let all = (2..=64).all(|n| functional_identity_check(n) == Ok(true));
    println!("identity holds for n = 2..64: {all}");

    for order in 2..=5 {
        println!(
            "degree of a polynomial solution, order {order}: {}",
            infer_degree(order)?
        );
    }

    for candidate in solve_linear_ansatz(3)? {
        let failed: Vec<String> = candidate.violations().map(|r| r.to_string()).collect();
        if failed.is_empty() {
            println!(
                "f(x) = {}x + {} satisfies every relation",
                candidate.a, candidate.b
            );
        } else {
            println!(
                "f(x) = {}x + {} fails {}",
                candidate.a,
                candidate.b,
                failed.join(", ")
            );
        }
    }
    Ok(())
}
