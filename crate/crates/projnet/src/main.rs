fn main() {
    std::process::exit(projnet::cli::run());
}
