// Copyright 2026 The planarpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "planarpulse/sequence_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace planarpulse {

namespace {

using nlohmann::json;

// 17 significant digits round-trip any double exactly.
std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DocumentParseError(std::string("non-finite value for ") + what);
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t consumed = 0;
        const double v = std::stod(s, &consumed);
        if (consumed != s.size()) {
            throw DocumentParseError(std::string("trailing characters in ") + what +
                                     ": '" + s + "'");
        }
        return require_finite(v, what);
    } catch (const std::logic_error&) {
        throw DocumentParseError(std::string("expected a number for ") + what +
                                 ", got '" + s + "'");
    }
}

}  // namespace

std::string format_complex(cplx z) {
    std::string out = format_double(z.real());
    out += (z.imag() < 0.0 || std::signbit(z.imag())) ? "-" : "+";
    out += format_double(std::abs(z.imag()));
    out += "j";
    return out;
}

cplx parse_complex(const std::string& text) {
    if (text.empty()) {
        throw DocumentParseError("empty complex literal");
    }
    std::string s = text;
    bool has_j = false;
    if (s.back() == 'j' || s.back() == 'J') {
        has_j = true;
        s.pop_back();
    }
    if (!has_j) {
        return {parse_double(s, "complex literal"), 0.0};
    }
    // Find the sign that separates real and imaginary parts, skipping a
    // leading sign and exponent signs.
    std::size_t sep = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            sep = i;  // keep the last match: "1e-3-2j" splits at the second '-'
        }
    }
    if (sep == std::string::npos) {
        // Pure imaginary: "2j", "-j", "j".
        if (s.empty() || s == "+" || s == "-") {
            s += "1";
        }
        return {0.0, parse_double(s, "imaginary part")};
    }
    std::string re = s.substr(0, sep);
    std::string im = s.substr(sep);
    if (im == "+" || im == "-") {
        im += "1";
    }
    return {parse_double(re, "real part"), parse_double(im, "imaginary part")};
}

std::string format_target(const TargetKind& kind) {
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, ZGate>) {
                return "z:" + format_double(k.phi);
            } else if constexpr (std::is_same_v<T, HadamardAsym>) {
                return "hadamard";
            } else if constexpr (std::is_same_v<T, HadamardSym>) {
                return "hadamard-sym";
            } else if constexpr (std::is_same_v<T, PlanarRotation>) {
                return "rot:" + format_double(k.theta) + "," + format_double(k.phi);
            } else {
                const Mat2& u = k.unitary;
                return "arbitrary:" + format_complex(u.m00) + "," +
                       format_complex(u.m01) + "," + format_complex(u.m10) + "," +
                       format_complex(u.m11);
            }
        },
        kind);
}

TargetKind parse_target(const std::string& text) {
    if (text == "hadamard") {
        return HadamardAsym{};
    }
    if (text == "hadamard-sym") {
        return HadamardSym{};
    }
    const std::size_t colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string args =
        colon == std::string::npos ? std::string{} : text.substr(colon + 1);
    if (head == "z") {
        return ZGate{parse_double(args, "z phase")};
    }
    if (head == "rot") {
        const auto parts = split(args, ',');
        if (parts.size() != 2) {
            throw DocumentParseError("rot target needs theta,phi");
        }
        return PlanarRotation{parse_double(parts[0], "rot theta"),
                              parse_double(parts[1], "rot phi")};
    }
    if (head == "arbitrary") {
        const auto parts = split(args, ',');
        if (parts.size() != 4) {
            throw DocumentParseError("arbitrary target needs 4 complex entries");
        }
        return ArbitraryGate{Mat2{parse_complex(parts[0]), parse_complex(parts[1]),
                                  parse_complex(parts[2]), parse_complex(parts[3])}};
    }
    throw DocumentParseError("unknown target '" + text + "'");
}

std::string format_robustness(Robustness r) {
    return r == Robustness::nested ? "nested" : "ae";
}

Robustness parse_robustness(const std::string& text) {
    if (text == "nested") {
        return Robustness::nested;
    }
    if (text == "ae" || text == "none") {
        return Robustness::amplitude_only;
    }
    throw DocumentParseError("unknown robustness '" + text + "'");
}

std::string serialize(const SequenceDocument& doc) {
    // Hand-rolled emitter so angle decimals carry exactly 17 significant
    // digits; parsing goes through a JSON library.
    std::ostringstream out;
    out << "{\n";
    out << "  \"format\": \"planarpulse-sequence\",\n";
    out << "  \"version\": " << doc.version << ",\n";
    out << "  \"pulse_order\": \"time\",\n";
    out << "  \"target\": \"" << doc.target << "\",\n";
    out << "  \"robustness\": \"" << doc.robustness << "\",\n";
    out << "  \"pulses\": [";
    for (std::size_t i = 0; i < doc.pulses.size(); ++i) {
        out << (i == 0 ? "\n" : ",\n");
        out << "    {\"theta\": " << format_double(doc.pulses[i].theta)
            << ", \"phi\": " << format_double(doc.pulses[i].phi) << "}";
    }
    out << (doc.pulses.empty() ? "]" : "\n  ]");
    if (doc.provenance) {
        const SequenceProvenance& p = *doc.provenance;
        out << ",\n  \"provenance\": {\"phi3\": " << format_double(p.phi3)
            << ", \"phi4\": " << format_double(p.phi4)
            << ", \"r\": " << format_double(p.r) << ", \"branch\": \""
            << (p.branch == QuadBranch::principal ? "principal" : "mirror")
            << "\"}";
    }
    out << "\n}\n";
    return out.str();
}

SequenceDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DocumentParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != "planarpulse-sequence") {
            throw DocumentParseError("not a planarpulse sequence document");
        }
        SequenceDocument doc;
        doc.version = j.at("version").get<int>();
        if (doc.version != 1) {
            throw DocumentParseError("unsupported document version");
        }
        if (j.at("pulse_order").get<std::string>() != "time") {
            throw DocumentParseError("pulse_order must be \"time\"");
        }
        doc.target = j.at("target").get<std::string>();
        parse_target(doc.target);  // validate grammar early
        doc.robustness = j.at("robustness").get<std::string>();
        parse_robustness(doc.robustness);
        for (const json& p : j.at("pulses")) {
            const double theta = require_finite(p.at("theta").get<double>(), "theta");
            const double phi = require_finite(p.at("phi").get<double>(), "phi");
            try {
                doc.pulses.emplace_back(theta, phi);
            } catch (const std::invalid_argument& e) {
                throw DocumentParseError(e.what());
            }
        }
        if (j.contains("provenance")) {
            const json& p = j.at("provenance");
            const std::string branch = p.at("branch").get<std::string>();
            if (branch != "principal" && branch != "mirror") {
                throw DocumentParseError("unknown closure branch '" + branch + "'");
            }
            doc.provenance = SequenceProvenance{
                require_finite(p.at("phi3").get<double>(), "phi3"),
                require_finite(p.at("phi4").get<double>(), "phi4"),
                require_finite(p.at("r").get<double>(), "r"),
                branch == "principal" ? QuadBranch::principal : QuadBranch::mirror,
            };
        }
        return doc;
    } catch (const json::exception& e) {
        throw DocumentParseError(std::string("malformed document: ") + e.what());
    }
}

void save_document(const SequenceDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DocumentParseError("cannot open '" + path + "' for writing");
    }
    out << serialize(doc);
    if (!out) {
        throw DocumentParseError("failed writing '" + path + "'");
    }
}

SequenceDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DocumentParseError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

}  // namespace planarpulse
