fn main() {
    std::process::exit(grouplect::cli::main_with_args(std::env::args_os()));
}
