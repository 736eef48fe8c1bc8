#pragma once

#include <json.hpp>

#include "gkzlift/ahseries.hpp"
#include "gkzlift/cmcycles.hpp"
#include "gkzlift/lift.hpp"
#include "gkzlift/relations.hpp"
#include "gkzlift/weil.hpp"

namespace gkzlift::io {

using nlohmann::json;

json to_json(const QExpansion& s);
QExpansion qexpansion_from_json(const json& j);

json to_json(const weil::VVForm& f);
weil::VVForm vvform_from_json(const json& j);

json to_json(const weil::PlusForm& g);
weil::PlusForm plusform_from_json(const json& j);

json to_json(const ah::AHSeries& F);

json to_json(const lift::ExactReal& v);
json to_json(const lift::HeegnerPoint& p);
json to_json(const lift::PoleData& p);
json to_json(const lift::LiftResult& r);
json to_json(const lift::Certificate& c);

json to_json(const cm::QuadElem& q);
json to_json(const cm::Traceless& t);
json to_json(const cm::WedgeForm& w);
json to_json(const cm::FundamentalClass& f);

json to_json(const gkz::RelationLattice& rl);

} // namespace gkzlift::io
