//! Holds the `acceptance` test target. Run it with `cargo test -p ckq-suite --test acceptance`.
