fn main() {
    std::process::exit(bchdim::cli::main_with_args(std::env::args_os()));
}
