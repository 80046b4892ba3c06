fn main() {
    std::process::exit(flagtrans::cli::run(std::env::args_os()));
}
