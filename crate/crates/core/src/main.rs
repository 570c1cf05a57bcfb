fn main() {
    std::process::exit(tropconv::cli::main_with_args(std::env::args_os()));
}
