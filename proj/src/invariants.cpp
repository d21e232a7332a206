#include "esch/invariants.hpp"

#include <numeric>
#include <stdexcept>

namespace esch {

const char* to_string(CondLine line) {
    switch (line) {
        case CondLine::Col1: return "col1";
        case CondLine::Col2: return "col2";
        case CondLine::Col3: return "col3";
        case CondLine::Row1: return "row1";
        case CondLine::Row2: return "row2";
        case CondLine::Row3: return "row3";
        case CondLine::Fail: return "fail";
    }
    return "?";
}

BasicInvariants basic_invariants(const ParamPair& pp) {
    auto [s1k, s2k, s3k] = sym_polys(pp.k);
    auto [s1l, s2l, s3l] = sym_polys(pp.l);

    Int r = s2k - s2l;
    if (r == 0)
        throw std::domain_error("basic_invariants: r = 0");
    if (!r.fits_slong_p())
        throw std::overflow_error("basic_invariants: r exceeds machine range");

    BasicInvariants out;
    out.r_signed = r.get_si();
    out.r_abs = std::llabs(out.r_signed);
    out.s = signed_residue(s3k - s3l, out.r_abs);

    Int p1 = (2 * s1k * s1k - 6 * s2k) % out.r_abs;
    if (p1 < 0) p1 += out.r_abs;
    out.p1 = p1.get_si();

    std::int64_t s_rep = out.s.value >= 0 ? out.s.value : out.s.value + out.r_abs;
    if (out.r_abs == 1) {
        out.linking = QModZ{};
    } else {
        if (std::gcd(s_rep, out.r_abs) != 1)
            throw std::domain_error("basic_invariants: linking form degenerate");
        std::int64_t inv = mod_inverse(s_rep, out.r_abs);
        out.linking = qmodz(make_rat(-Int(inv), Int(out.r_signed)));
    }
    return out;
}

namespace {

// 1-based accessors following the residue conventions [n]_3 and [n]_2
std::int64_t kat(const ParamPair& pp, std::int64_t i) { return pp.k[res1(i, 3) - 1]; }
std::int64_t lat(const ParamPair& pp, std::int64_t i) { return pp.l[res1(i, 3) - 1]; }

void check_line_index(int j) {
    if (j < 1 || j > 3)
        throw std::invalid_argument("line index must be 1, 2 or 3");
}

}  // namespace

Int q_column(const ParamPair& pp, int j) {
    check_line_index(j);
    int jp = static_cast<int>(res1(j + 1, 2));
    Int q = 0;
    for (int i = 1; i <= 3; ++i) {
        Int a = kat(pp, i) - lat(pp, j);
        Int b = kat(pp, i) - lat(pp, jp);
        q += a * a + b * b;
    }
    Int d = lat(pp, j) - lat(pp, jp);
    return q - d * d;
}

Int q_row(const ParamPair& pp, int j) {
    check_line_index(j);
    int jp = static_cast<int>(res1(j + 1, 2));
    Int q = 0;
    for (int i = 1; i <= 3; ++i) {
        Int a = kat(pp, j) - lat(pp, i);
        Int b = kat(pp, jp) - lat(pp, i);
        q += a * a + b * b;
    }
    Int d = kat(pp, j) - kat(pp, jp);
    return q - d * d;
}

namespace {

LensSpace checked_lens(std::int64_t p, std::array<std::int64_t, 4> params) {
    LensSpace L{p, params};
    validate(L);  // coprimality follows from freeness + condition (C)
    std::int64_t sum = params[0] + params[1] + params[2] + params[3];
    if (sum % 2 != 0)
        throw std::logic_error("lens space construction: odd parameter sum");
    return L;
}

}  // namespace

std::array<LensSpace, 3> lens_spaces_for_column(const ParamPair& pp, int j) {
    check_line_index(j);
    int jp = static_cast<int>(res1(j + 1, 2));
    std::array<LensSpace, 3> out;
    for (int i = 1; i <= 3; ++i) {
        out[i - 1] = checked_lens(kat(pp, i) - lat(pp, j),
                                  {kat(pp, i + 1) - lat(pp, j), kat(pp, i + 2) - lat(pp, j),
                                   kat(pp, i + 1) - lat(pp, jp), kat(pp, i + 2) - lat(pp, jp)});
    }
    return out;
}

std::array<LensSpace, 3> lens_spaces_for_row(const ParamPair& pp, int j) {
    check_line_index(j);
    int jp = static_cast<int>(res1(j + 1, 2));
    std::array<LensSpace, 3> out;
    for (int i = 1; i <= 3; ++i) {
        out[i - 1] = checked_lens(kat(pp, j) - lat(pp, i),
                                  {kat(pp, j) - lat(pp, i + 1), kat(pp, j) - lat(pp, i + 2),
                                   kat(pp, jp) - lat(pp, i + 1), kat(pp, jp) - lat(pp, i + 2)});
    }
    return out;
}

namespace {

struct LineTerms {
    Int r;       // signed
    Int prod;    // signed product of the three p's of the line
    Int q;
    std::array<LensSpace, 3> lens;
    int lens_sign;  // -1 for columns, +1 for rows
};

KSInvariants assemble(const LineTerms& t, CondLine source, std::int64_t r_abs) {
    // one certified evaluation per lens space feeds all three invariants
    Rat lens1(0), lens2(0), lens3(0);
    for (const auto& L : t.lens) {
        CertifiedSums cs = trig_sums(L);
        lens1 += (cs.T + 14 * cs.S) * make_rat(1, Int(224) * L.p);
        lens2 += (cs.R - cs.S) * make_rat(1, Int(16) * L.p);
        lens3 += (cs.U - cs.S) * make_rat(1, Int(16) * L.p);
    }

    Int rp = t.r * t.prod;
    Rat main1 = make_rat(4 * abs(rp) - t.q * t.q, Int(128) * 7 * rp);
    Rat main2 = make_rat(t.q - 2, Int(48) * rp);
    Rat main3 = make_rat(t.q - 8, Int(12) * rp);

    KSInvariants ks;
    ks.s1 = qmodz(main1 + t.lens_sign * lens1);
    ks.s2 = qmodz(main2 + t.lens_sign * lens2);
    ks.s3 = qmodz(main3 + t.lens_sign * lens3);
    ks.s22 = qmodz(2 * Int(r_abs) * ks.s2.v);
    ks.source = source;
    return ks;
}

bool coprime3(std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1;
}

}  // namespace

KSInvariants ks_invariants_column(const ParamPair& pp, int j) {
    check_line_index(j);
    if (!coprime3(pp.k[0] - pp.l[j - 1], pp.k[1] - pp.l[j - 1], pp.k[2] - pp.l[j - 1]))
        throw std::domain_error("condition (C) not satisfied for this column");
    BasicInvariants basic = basic_invariants(pp);
    LineTerms t;
    t.r = basic.r_signed;
    t.prod = Int(pp.k[0] - pp.l[j - 1]) * (pp.k[1] - pp.l[j - 1]) * (pp.k[2] - pp.l[j - 1]);
    t.q = q_column(pp, j);
    t.lens = lens_spaces_for_column(pp, j);
    t.lens_sign = -1;
    auto source = j == 1 ? CondLine::Col1 : j == 2 ? CondLine::Col2 : CondLine::Col3;
    return assemble(t, source, basic.r_abs);
}

KSInvariants ks_invariants_row(const ParamPair& pp, int j) {
    check_line_index(j);
    if (!coprime3(pp.k[j - 1] - pp.l[0], pp.k[j - 1] - pp.l[1], pp.k[j - 1] - pp.l[2]))
        throw std::domain_error("condition (C) not satisfied for this row");
    BasicInvariants basic = basic_invariants(pp);
    LineTerms t;
    t.r = basic.r_signed;
    t.prod = Int(pp.k[j - 1] - pp.l[0]) * (pp.k[j - 1] - pp.l[1]) * (pp.k[j - 1] - pp.l[2]);
    t.q = q_row(pp, j);
    t.lens = lens_spaces_for_row(pp, j);
    t.lens_sign = +1;
    auto source = j == 1 ? CondLine::Row1 : j == 2 ? CondLine::Row2 : CondLine::Row3;
    return assemble(t, source, basic.r_abs);
}

InvariantRecord basic_record(const ParamPair& pp) {
    InvariantRecord rec;
    rec.params = pp;
    rec.normal = normalize(pp);
    rec.basic = basic_invariants(pp);
    rec.cohom = cohomogeneity(rec.normal);
    return rec;
}

void ensure_ks(InvariantRecord& rec) {
    if (rec.ks) return;
    CondC cc = condition_c(rec.params);
    if (!cc.columns.empty())
        rec.ks = ks_invariants_column(rec.params, cc.columns.front());
    else if (!cc.rows.empty())
        rec.ks = ks_invariants_row(rec.params, cc.rows.front());
}

InvariantRecord full_record(const ParamPair& pp) {
    InvariantRecord rec = basic_record(pp);
    ensure_ks(rec);
    return rec;
}

}  // namespace esch
