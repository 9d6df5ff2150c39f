// Command-line front end: embed, extract, capacity, psnr, compare.
//
// Exit codes: 0 success, 1 I/O or format error, 2 capacity exceeded,
// 3 corrupt stego image, 64 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "stegmatch/errors.hpp"
#include "stegmatch/image.hpp"
#include "stegmatch/metrics.hpp"
#include "stegmatch/stego.hpp"

namespace {

constexpr int kExitUsage = 64;

struct Options {
    std::string algorithm = "weighted";
    std::string cover;
    std::string stego;
    std::string out;
    std::string message;
    std::string message_file;
    bool has_message = false;
    bool has_message_file = false;
    std::string image_a;
    std::string image_b;
};

stegmatch::Algorithm parse_algorithm(const std::string& name) {
    return name == "lsb" ? stegmatch::Algorithm::SimpleLsb
                         : stegmatch::Algorithm::WeightedMatching;
}

std::vector<std::uint8_t> read_payload(const Options& opt) {
    if (opt.has_message) {
        return {opt.message.begin(), opt.message.end()};
    }
    if (opt.message_file == "-") {
        return {std::istreambuf_iterator<char>(std::cin),
                std::istreambuf_iterator<char>()};
    }
    std::ifstream f(opt.message_file, std::ios::binary);
    if (!f) {
        throw stegmatch::IoError("cannot open message file " + opt.message_file);
    }
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void print_psnr_value(std::ostream& os, const stegmatch::PsnrReport& report) {
    if (report.identical()) {
        os << "identical";
    } else {
        os << std::setprecision(10) << *report.psnr_db;
    }
}

int cmd_embed(const Options& opt) {
    const auto alg = parse_algorithm(opt.algorithm);
    const auto payload = read_payload(opt);
    const auto cover = stegmatch::load_image(opt.cover);
    const auto result = stegmatch::embed(cover, payload, alg);
    stegmatch::save_image(result.stego, opt.out);

    const auto quality = stegmatch::psnr(cover, result.stego);
    std::cout << "algorithm=" << stegmatch::algorithm_name(alg) << "\n"
              << "payload_bytes=" << payload.size() << "\n"
              << "bits_embedded=" << result.bits_embedded << "\n"
              << "channel_bytes_used=" << result.channel_bytes_used << "\n"
              << "lsb_flips=" << result.lsb_flips << "\n"
              << "mse=" << std::setprecision(12) << quality.mse << "\n"
              << "psnr_db=";
    print_psnr_value(std::cout, quality);
    std::cout << "\n"
              << "stego=" << opt.out << "\n";
    return 0;
}

int cmd_extract(const Options& opt) {
    const auto alg = parse_algorithm(opt.algorithm);
    const auto stego = stegmatch::load_image(opt.stego);
    const auto payload = stegmatch::extract(stego, alg);

    if (opt.out.empty()) {
        // Byte-transparent: raw payload, no trailing newline.
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        std::fflush(stdout);
        return 0;
    }
    std::ofstream f(opt.out, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw stegmatch::IoError("cannot write " + opt.out);
    }
    f.write(reinterpret_cast<const char*>(payload.data()),
            static_cast<std::streamsize>(payload.size()));
    if (!f) {
        throw stegmatch::IoError("write failed for " + opt.out);
    }
    return 0;
}

int cmd_capacity(const Options& opt) {
    const auto cover = stegmatch::load_image(opt.cover);
    std::cout << stegmatch::capacity(cover) << "\n";
    return 0;
}

int cmd_psnr(const Options& opt) {
    const auto a = stegmatch::load_image(opt.image_a);
    const auto b = stegmatch::load_image(opt.image_b);
    const auto report = stegmatch::psnr(a, b);
    if (report.identical()) {
        std::cout << "identical\n";
        return 0;
    }
    std::cout << "mse=" << std::setprecision(12) << report.mse << "\n"
              << "psnr_db=" << std::setprecision(10) << *report.psnr_db << "\n";
    return 0;
}

int cmd_compare(const Options& opt) {
    const auto payload = read_payload(opt);
    const auto cover = stegmatch::load_image(opt.cover);

    const std::size_t name_col =
        std::max<std::size_t>(opt.cover.size(), sizeof("cover_image") - 1) + 2;
    std::cout << std::left << std::setw(static_cast<int>(name_col)) << "cover_image"
              << std::setw(22) << "algorithm"
              << "psnr_db\n";
    for (const auto alg : {stegmatch::Algorithm::WeightedMatching,
                           stegmatch::Algorithm::SimpleLsb}) {
        const auto result = stegmatch::embed(cover, payload, alg);
        const auto quality = stegmatch::psnr(cover, result.stego);
        std::cout << std::left << std::setw(static_cast<int>(name_col)) << opt.cover
                  << std::setw(22) << stegmatch::algorithm_name(alg)
                  << std::setprecision(6) << std::fixed;
        if (quality.identical()) {
            std::cout << "identical";
        } else {
            std::cout << *quality.psnr_db;
        }
        std::cout << "\n" << std::defaultfloat;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LSB image steganography with weighted-matching embedding"};
    app.require_subcommand(1);

    Options opt;

    const auto add_algorithm = [&](CLI::App* sub) {
        sub->add_option("-a,--algorithm", opt.algorithm,
                        "Embedding algorithm: weighted (default) or lsb")
            ->check(CLI::IsMember({"weighted", "lsb"}));
    };
    const auto add_message = [&](CLI::App* sub) {
        auto* msg = sub->add_option("-m,--message", opt.message,
                                    "Inline text message (embedded as UTF-8 bytes)");
        auto* file = sub->add_option("-f,--message-file", opt.message_file,
                                     "Read payload bytes from a file, or - for stdin");
        msg->excludes(file);
        file->excludes(msg);
    };

    auto* embed = app.add_subcommand("embed", "Hide a payload in a cover image");
    add_algorithm(embed);
    add_message(embed);
    embed->add_option("-c,--cover", opt.cover, "Cover image (PNG or 24-bit BMP)")
        ->required();
    embed->add_option("-o,--out", opt.out, "Stego image output path")->required();

    auto* extract = app.add_subcommand("extract", "Recover a payload from a stego image");
    add_algorithm(extract);
    extract->add_option("-s,--stego", opt.stego, "Stego image")->required();
    extract->add_option("-o,--out", opt.out,
                        "Payload output path (default: raw bytes to stdout)");

    auto* capacity = app.add_subcommand("capacity", "Print payload capacity in bytes");
    capacity->add_option("-c,--cover", opt.cover, "Cover image")->required();

    auto* psnr = app.add_subcommand("psnr", "MSE and PSNR of two same-sized images");
    psnr->add_option("image_a", opt.image_a, "First image")->required();
    psnr->add_option("image_b", opt.image_b, "Second image")->required();

    auto* compare = app.add_subcommand(
        "compare", "Embed with both algorithms and tabulate PSNR against the cover");
    add_message(compare);
    compare->add_option("-c,--cover", opt.cover, "Cover image")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    opt.has_message = embed->count("--message") > 0 || compare->count("--message") > 0;
    opt.has_message_file =
        embed->count("--message-file") > 0 || compare->count("--message-file") > 0;
    if ((app.got_subcommand(embed) || app.got_subcommand(compare)) &&
        !opt.has_message && !opt.has_message_file) {
        std::cerr << "error: exactly one of --message / --message-file is required\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(embed)) return cmd_embed(opt);
        if (app.got_subcommand(extract)) return cmd_extract(opt);
        if (app.got_subcommand(capacity)) return cmd_capacity(opt);
        if (app.got_subcommand(psnr)) return cmd_psnr(opt);
        return cmd_compare(opt);
    } catch (const stegmatch::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const stegmatch::CorruptStegoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const stegmatch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
