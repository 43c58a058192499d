//! Runs the built-in self-checks one suite at a time.

use qflow::verify::{run_suite, Suite};

fn main() {
    for suite in [Suite::Units, Suite::Specialfns, Suite::Eigenstates] {
        for check in run_suite(suite) {
            println!("{check}");
        }
    }
}
