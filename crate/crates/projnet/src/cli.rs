//! Command-line surface. Placeholder; filled in with the design layer.

pub fn run() -> i32 {
    eprintln!("not yet wired");
    2
}
