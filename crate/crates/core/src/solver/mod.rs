//! Searches for points: integer solutions of `x³ + y³ = m`, points of
//! `f(x, y, t) = 0` over `Q(t)` of bounded height, and Frobenius twists over
//! `F_p(t)`.

mod integer;
mod point;
mod search;
mod twist;

pub use integer::{nf_height, on_cubesum, solve_cubesum_bruteforce, solve_cubesum_divisor, taxicab_smallest, IntegerPoint};
pub use point::{ff_height, verify_ff_solution, FunctionFieldPoint};
pub use search::{search_ff_solutions, search_ff_solutions_with, FfSearch, SearchMode};
pub use twist::{frobenius_twist, is_new_solution, twist_solution};
