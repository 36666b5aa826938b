fn main() {
    std::process::exit(twisted_minors::cli::main_with_args());
}
