#pragma once

#include <json.hpp>

#include "otn/closure_lab.hpp"
#include "otn/order.hpp"
#include "otn/term.hpp"
#include "otn/theta.hpp"

namespace otn {

using Json = nlohmann::json;

Json to_json(Term t);
Term term_from_json(const Json& j);
Json to_json(const FiniteFn& f);
FiniteFn fn_from_json(const Json& j);
Json to_json(const Tnf& x);

Json to_json(const Verdict& v);
Json to_json(const KResult& k);
Json to_json(const Universe& u, bool with_terms = true);
Json to_json(const DistinguishedReport& r);
Json to_json(const CascadeReport& r);

Json printed(const std::vector<Term>& ts);

}  // namespace otn
