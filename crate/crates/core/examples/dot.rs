//! DOT rendering of a 1-skeleton.

use embed3::dot::complex_dot;
use embed3::fixtures;

fn main() {
    print!("{}", complex_dot(&fixtures::book3()));
}
