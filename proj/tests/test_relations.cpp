#include "chernum/relations.hpp"
#include "chernum/report_json.hpp"
#include "chernum/selftest.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <thread>

using namespace chernum;
using namespace chernum::relations;
using cobord::cp;
using cobord::GradedClass;
using geom::Bundle;
using geom::ProjProduct;
using symfunc::BigradedElement;
using symfunc::Partition;
using symfunc::partitions_of;

namespace {

BigradedElement hy(std::initializer_list<int> p, Rational c) { return BigradedElement::term(Partition(p), {}, c); }
BigradedElement hz(std::initializer_list<int> p, Rational c) { return BigradedElement::term({}, Partition(p), c); }

}  // namespace

TEST_CASE("master relation closed values") {
    // CP^1: both sides -2 h_1(y) - 2 h_1(z)
    BigradedElement expect = hy({1}, -2) + hz({1}, -2);
    CHECK(master_relation_lhs(geom::normal_numbers(ProjProduct({1}))) == expect);
    CHECK(master_relation_rhs(ProjProduct({1})) == expect);

    CHECK(master_relation_lhs(CobordClass::point()) == BigradedElement::one());
    CHECK(master_relation_rhs(ProjProduct{}) == BigradedElement::one());
}

TEST_CASE("master relation holds on every model of dimension <= 4") {
    for (const auto& m : selftest::models_up_to(4)) {
        auto r = master_relation(m);
        INFO(m.to_string());
        CHECK(r.equal);
        // both sides homogeneous of total degree n
        CHECK(std::get<BigradedElement>(r.lhs).is_homogeneous(m.total_dim()));
        CHECK(std::get<BigradedElement>(r.rhs).is_homogeneous(m.total_dim()));
    }
}

TEST_CASE("master relation rhs consumes only the number vectors of the duals") {
    // replace each dual class by its reconstruction from cp coordinates and
    // recompute: the result must be unchanged
    ProjProduct m({2, 1});
    int n = m.total_dim();
    BigradedElement rebuilt;
    {
        symfunc::SymFn star = cobord::s_star_y(geom::normal_numbers(m));
        for (const auto& [lam, c] : star.coeffs()) rebuilt.add_term(lam, {}, c);
    }
    for (int w = 1; w <= n; ++w)
        for (const auto& lam : partitions_of(w)) {
            auto sub = geom::chern_submanifold(m, lam, Bundle::nu());
            GradedClass substitute;
            for (const auto& [d, comp] : sub.components()) {
                CobordClass again(d);
                for (const auto& [mu, q] : cobord::decompose_cp(comp))
                    again = again + cobord::cp_product(mu).scale(q);
                substitute = substitute + GradedClass(again);
            }
            symfunc::SymFn star = cobord::s_star_y(substitute);
            for (const auto& [mu, c] : star.coeffs()) rebuilt.add_term(mu, lam, c);
        }
    CHECK(rebuilt == master_relation_rhs(m));
}

TEST_CASE("chi_y relation instances") {
    auto r1 = chi_y_relation(ProjProduct({1}));
    Poly y = Poly::variable();
    CHECK(r1.equal);
    CHECK(std::get<Poly>(r1.lhs) == Poly(1) + y);
    CHECK(std::get<Poly>(r1.rhs) == Poly(1) + y);

    auto r2 = chi_y_relation(ProjProduct({2}));
    CHECK(r2.equal);
    CHECK(std::get<Poly>(r2.rhs) == (Poly(1) + y) * (Poly(1) + y));

    auto rpt = chi_y_relation(ProjProduct{});
    CHECK(rpt.equal);
    CHECK(std::get<Poly>(rpt.lhs) == Poly(1));

    for (const auto& m : selftest::models_up_to(4)) CHECK(chi_y_relation(m).equal);
}

TEST_CASE("chi_y relation specializations at y = -1 and y = 1 for CP(2)") {
    auto r = chi_y_relation(ProjProduct({2}));
    const Poly& rhs = std::get<Poly>(r.rhs);
    // euler side: 3 - 6 + 3 = 0
    CHECK(rhs.eval(-1) == 0);
    // signature side: 1 + 0 + 3 = 4 = 2^2 * Todd
    CHECK(rhs.eval(1) == 4);
    CHECK(std::get<Poly>(r.lhs).eval(1) == 4);
    // term-by-term: chi_y duals of c_1, c_2
    auto chiy = pseries::chi_y_series(2).inverse();
    auto c1 = geom::chern_submanifold(ProjProduct({2}), Partition({1}), Bundle::tau());
    auto c2 = geom::chern_submanifold(ProjProduct({2}), Partition({1, 1}), Bundle::tau());
    CHECK(cobord::genus(c1, chiy).eval(-1) == 6);
    CHECK(cobord::genus(c2, chiy).eval(-1) == 3);
}

TEST_CASE("signature relation instances") {
    auto r = signature_relation(ProjProduct({2}));
    CHECK(r.equal);
    CHECK(std::get<Rational>(r.lhs) == -2);
    CHECK(std::get<Rational>(r.rhs) == -2);

    auto r11 = signature_relation(ProjProduct({1, 1}));
    CHECK(r11.equal);
    CHECK(std::get<Rational>(r11.lhs) == 0);

    auto rpt = signature_relation(ProjProduct{});
    CHECK(rpt.equal);
    CHECK(std::get<Rational>(rpt.lhs) == 1);

    auto r22 = signature_relation(ProjProduct({2, 2}));
    CHECK(r22.equal);
    CHECK(std::get<Rational>(r22.lhs) == 4);

    CHECK_THROWS_AS(signature_relation(ProjProduct({1})), std::invalid_argument);

    for (const auto& m : selftest::models_up_to(4))
        if (m.total_dim() % 2 == 0) CHECK(signature_relation(m).equal);
}

TEST_CASE("signature congruence") {
    auto r = signature_congruence(ProjProduct({2}));
    CHECK(r.equal);  // -2 = 0 mod 2
    CHECK(signature_congruence(ProjProduct({1, 1})).equal);
    CHECK(signature_congruence(ProjProduct({2, 2})).equal);  // 4 = 0 mod 2
    for (const auto& m : selftest::models_up_to(4))
        if (m.total_dim() % 2 == 0 && m.total_dim() > 0) CHECK(signature_congruence(m).equal);
}

TEST_CASE("general bundle relation instances") {
    // (CP^1, O(1)): both sides h_1(z) - 2 h_1(y)
    auto r = general_chern_relation(ProjProduct({1}), Bundle::line({1}));
    CHECK(r.equal);
    CHECK(std::get<BigradedElement>(r.lhs) == hz({1}, 1) + hy({1}, -2));

    // zero bundle reduces to S*_(y)(M)
    auto r0 = general_chern_relation(ProjProduct({1}), Bundle::zero());
    CHECK(r0.equal);
    CHECK(std::get<BigradedElement>(r0.lhs) == hy({1}, -2));

    CHECK(general_chern_relation(ProjProduct({2}), Bundle::line({1}) + Bundle::line({1})).equal);
    CHECK(general_chern_relation(ProjProduct({1, 1}), Bundle::line({1, 0})).equal);
    CHECK(general_chern_relation(ProjProduct({2}), Bundle::tau()).equal);
    CHECK(general_chern_relation(ProjProduct({2}), Bundle::nu()).equal);
    CHECK(general_chern_relation(ProjProduct({1}), Bundle::line({1}).conjugate()).equal);
    CHECK(general_chern_relation(ProjProduct({2, 1}), Bundle::tau().conjugate()).equal);
}

TEST_CASE("the master relation is the nu instance of the general relation") {
    for (const auto& m : selftest::models_up_to(3)) {
        auto general = general_chern_relation(m, Bundle::nu());
        CHECK(std::get<BigradedElement>(general.rhs) == master_relation_rhs(m));
    }
}

TEST_CASE("integrality of the twisted pairing") {
    auto r = integrality_relation(ProjProduct({1}), Bundle::zero());
    CHECK(r.equal);
    CHECK(std::get<BigradedElement>(r.lhs) == BigradedElement::one() + hy({1}, -2));

    auto rpt = integrality_relation(ProjProduct{}, Bundle::zero());
    CHECK(rpt.equal);
    CHECK(std::get<BigradedElement>(rpt.lhs) == BigradedElement::one());

    CHECK(integrality_relation(ProjProduct({2}), Bundle::line({1})).equal);
    CHECK(integrality_relation(ProjProduct({2}), Bundle::line({2})).equal);   // cohomology-level bundle
    CHECK(integrality_relation(ProjProduct({2, 1}), Bundle::line({1, 1})).equal);
    for (const auto& m : selftest::models_up_to(3)) {
        CHECK(integrality_relation(m, Bundle::zero()).equal);
        CHECK(integrality_relation(m, Bundle::tau()).equal);
        CHECK(integrality_relation(m, Bundle::nu()).equal);
    }
}

TEST_CASE("line-subbundle euler parity") {
    auto r1 = line_factor_euler_relation(ProjProduct({1}), 0);
    CHECK(r1.equal);
    CHECK(std::get<Rational>(r1.lhs) == 1);

    auto r2 = line_factor_euler_relation(ProjProduct({1, 1}), 0);
    CHECK(r2.equal);
    CHECK(std::get<Rational>(r2.lhs) == 2);

    auto r3 = line_factor_euler_relation(ProjProduct({1, 1, 1}), 0);
    CHECK(r3.equal);
    CHECK(std::get<Rational>(r3.lhs) == 4);

    auto r4 = line_factor_euler_relation(ProjProduct({2, 1}), 1);
    CHECK(r4.equal);
    CHECK(std::get<Rational>(r4.lhs) == 3);

    CHECK_THROWS_AS(line_factor_euler_relation(ProjProduct({2}), 0), std::invalid_argument);
}

TEST_CASE("specializing the master relation reproduces the chi_y instance") {
    ProjProduct m({1});
    int n = m.total_dim();
    auto rel_lhs = master_relation_lhs(geom::normal_numbers(m));
    auto rel_rhs = master_relation_rhs(m);

    // y slot: h_a(y) -> coefficients of Q^{-1}; z slot: z_1 = -y, rest 0
    auto qinv = pseries::chi_y_series(n).inverse();
    std::vector<Poly> yvals(qinv.coeffs().begin(), qinv.coeffs().end());
    std::vector<Poly> zvars = {Poly::variable().scale(-1)};
    Poly specialized_lhs = specialize_relation(rel_lhs, yvals, zvars);
    Poly specialized_rhs = specialize_relation(rel_rhs, yvals, zvars);

    auto chiy_report = chi_y_relation(m);
    CHECK(specialized_lhs == std::get<Poly>(chiy_report.lhs));
    CHECK(specialized_rhs == std::get<Poly>(chiy_report.rhs));
}

TEST_CASE("specializing the master relation reproduces the signature instance") {
    for (const auto& m : selftest::models_up_to(4)) {
        if (m.total_dim() % 2 != 0 || m.total_dim() == 0) continue;
        auto rel = master_relation_lhs(geom::normal_numbers(m));
        auto rel_rhs = master_relation_rhs(m);
        auto sig = pseries::signature_series(m.total_dim());
        std::vector<Rational> yvals(sig.coeffs().begin(), sig.coeffs().end());
        std::vector<Rational> zvars = {1, -1};
        auto sig_report = signature_relation(m);
        INFO(m.to_string());
        CHECK(specialize_relation(rel, yvals, zvars) == std::get<Rational>(sig_report.lhs));
        CHECK(specialize_relation(rel_rhs, yvals, zvars) == std::get<Rational>(sig_report.rhs));
    }
}

TEST_CASE("identity specialization leaves the element unchanged") {
    ProjProduct m({2});
    auto rel = master_relation_rhs(m);
    std::vector<BigradedElement> yimg, zimg;
    for (int a = 0; a <= m.total_dim(); ++a) {
        yimg.push_back(a == 0 ? BigradedElement::one() : BigradedElement::term(Partition({a}), {}, 1));
        zimg.push_back(a == 0 ? BigradedElement::one() : BigradedElement::term({}, Partition({a}), 1));
    }
    CHECK(specialize_slots(rel, yimg, zimg) == rel);
}

TEST_CASE("reports serialize to json and back") {
    auto r = master_relation(ProjProduct({2}));
    auto j = report_to_json(r);
    CHECK(j.at("relation") == "thm3");
    CHECK(j.at("equal") == true);
    CHECK(report_from_json(j) == r);

    auto r2 = chi_y_relation(ProjProduct({2}));
    CHECK(report_from_json(report_to_json(r2)) == r2);

    auto r3 = signature_relation(ProjProduct({2}));
    CHECK(report_from_json(report_to_json(r3)) == r3);

    // a bigraded value serializes as a sorted list of partition pairs
    auto terms = value_to_json(r.lhs);
    CHECK(terms.is_array());
    CHECK(terms.size() == std::get<BigradedElement>(r.lhs).coeffs().size());
    for (const auto& t : terms) {
        CHECK(t.contains("y_partition"));
        CHECK(t.contains("z_partition"));
        CHECK(t.contains("numerator"));
        CHECK(t.contains("denominator"));
    }
}

TEST_CASE("acceptance criteria all pass at max dimension 4") {
    for (const auto& c : selftest::run_acceptance(4)) {
        INFO("criterion " << c.id << ": " << c.title);
        CHECK(c.pass);
    }
}

TEST_CASE("verification cases evaluate safely from concurrent tasks") {
    // memo tables (transitions, cp classes, formal-group data) are shared;
    // concurrent evaluation must agree with the serial result
    auto models = selftest::models_up_to(3);
    std::vector<VerificationReport> serial;
    serial.reserve(models.size());
    for (const auto& m : models) serial.push_back(master_relation(m));

    std::vector<VerificationReport> parallel(models.size());
    std::vector<std::thread> workers;
    workers.reserve(models.size());
    for (std::size_t i = 0; i < models.size(); ++i)
        workers.emplace_back([&, i] { parallel[i] = master_relation(models[i]); });
    for (auto& w : workers) w.join();

    for (std::size_t i = 0; i < models.size(); ++i) {
        CHECK(parallel[i].equal);
        CHECK(value_equal(parallel[i].lhs, serial[i].lhs));
        CHECK(value_equal(parallel[i].rhs, serial[i].rhs));
    }
}
