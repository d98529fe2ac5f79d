//! Holds the `acceptance` test target. Run it with
//! `cargo test -p rm-infoset-validation --test acceptance`.
