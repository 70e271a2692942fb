#include "pvi/catalog_data.hpp"

namespace pvi::detail {

// Parametrizations follow the published expressions for these solution
// classes.  The solutions of classes 50 and 51 are stored in the branch
// convention of the compact factored t-map (the two rational t-displays use
// the opposite sign of r; see tests/test_catalog.cpp).
const std::vector<EntrySource>& entry_sources() {
    static const std::vector<EntrySource> sources = {
        {
            "hitchin-dihedral",
            "dihedral solution, degree-4 parametrization",
            "1/2 1/2 1/2 1/2",
            4, 0,
            "s",
            {},
            {},
            "s^3*(s+2)/(2*s+1)",
            "-s",
            {},
        },
        {
            "hitchin-manin",
            "logarithmic-side partner of the dihedral solution",
            "0 1 1 1",
            4, 0,
            "u",
            {},
            {},
            "u^3*(u+2)/(2*u+1)",
            "u*(2*u+1)/(u+2)",
            {"hitchin-dihedral"},
        },
        {
            "boalch-31",
            "icosahedral class 31, rational parametrization",
            "1/5 1/5 1/5 1/5",
            10, 0,
            "s",
            {},
            {},
            "(s+1)^5*(s-3)^3*(s^2+4*s-1)/(256*s^3*(s^2-5))",
            "-(s+1)^4*(s-3)^2/(4*s*(s^2+3)*(s^2-5))",
            {"boalch-44"},
        },
        {
            "boalch-32",
            "icosahedral class 32, rational parametrization",
            "2/5 2/5 2/5 2/5",
            10, 0,
            "s",
            {},
            {},
            "(s+1)^5*(s-3)^3*(s^2+4*s-1)/(256*s^3*(s^2-5))",
            "-(s+1)^2*(s-3)^2*(s^2+4*s+7)/(48*s*(s^2-5))",
            {"boalch-45"},
        },
        {
            "boalch-39",
            "icosahedral class 39, elliptic parametrization",
            "1/3 1/3 4/5 4/5",
            15, 1,
            "s",
            {{"u", "3*(s+3)*(4*s^2-s+1)"}},
            {},
            "1/2 - (2*s^7-18*s^6+48*s^5-50*s^4+105*s^3+3*s^2-7*s-3)*u"
            "/(18*(s^2-4*s-1)*(4*s^2-s+1)^2)",
            "1/2 + (14*s^5-79*s^4+6*s^3+80*s^2+116*s-9)/(6*(s-1)*(s^2-4*s-1)*u)",
            {"boalch-47"},
        },
        {
            "boalch-39-tilde",
            "Okamoto image of class 39 on the (0,0,*,*) level",
            "0 0 7/15 13/15",
            15, 1,
            "s",
            {{"u", "3*(s+3)*(4*s^2-s+1)"}},
            {},
            "1/2 - (2*s^7-18*s^6+48*s^5-50*s^4+105*s^3+3*s^2-7*s-3)*u"
            "/(18*(s^2-4*s-1)*(4*s^2-s+1)^2)",
            "1/2 - (2*s^2-5*s-1)*u/(6*(s-1)*(4*s^2-s+1))",
            {},
        },
        {
            "boalch-40",
            "icosahedral class 40 on the class-39 curve",
            "2/5 2/5 2/3 2/3",
            15, 1,
            "s",
            {{"u", "3*(s+3)*(4*s^2-s+1)"}},
            {},
            "1/2 - (2*s^7-18*s^6+48*s^5-50*s^4+105*s^3+3*s^2-7*s-3)*u"
            "/(18*(s^2-4*s-1)*(4*s^2-s+1)^2)",
            "1/2 + (2*s^6-14*s^5+17*s^4+16*s^3-112*s^2-2*s-3)/(2*u*(3*s-1)*(s^2-4*s-1))",
            {"boalch-48"},
        },
        {
            "boalch-41",
            "icosahedral class 41, elliptic parametrization",
            "1/3 1/3 1/3 1/3",
            18, 1,
            "s",
            {{"u", "s*(8*s^2-11*s+8)"}},
            {},
            "1/2 + (s+1)*(32*s^8-320*s^7+1112*s^6-2420*s^5+3167*s^4-2420*s^3+1112*s^2"
            "-320*s+32)/(54*u^3*s*(s-1))",
            "1/2 - (8*s^7-28*s^6+75*s^5+31*s^4-269*s^3+318*s^2-166*s+56)"
            "/(18*u*(s-1)*(3*s^3-4*s^2+4*s+2))",
            {"boalch-49"},
        },
        {
            "boalch-44",
            "icosahedral class 44 on the curve u^2 = (q^2+1)(q^2-4q+9)",
            "1/2 1/2 1/5 1/5",
            20, 1,
            "q",
            {{"u", "(q^2+1)*(q^2-4*q+9)"}},
            {},
            "1/2 + (q^10-10*q^9+45*q^8-120*q^7+190*q^6+4*q^5-410*q^4+680*q^3+25*q^2"
            "-90*q-27)/(2*(q^2-4*q-1)*(q^2+1)*u^3)",
            "1/2 + (7*q^10-70*q^9+329*q^8-908*q^7+1494*q^6+24*q^5-3310*q^4+5692*q^3"
            "+211*q^2-418*q-171)/(2*(q^2-4*q-1)*(7*q^6-28*q^5+91*q^4-88*q^3+229*q^2"
            "-76*q+57)*u)",
            {"boalch-50"},
        },
        {
            "boalch-45",
            "icosahedral class 45 on the class-44 curve",
            "1/2 1/2 2/5 2/5",
            20, 1,
            "q",
            {{"u", "(q^2+1)*(q^2-4*q+9)"}},
            {},
            "1/2 + (q^10-10*q^9+45*q^8-120*q^7+190*q^6+4*q^5-410*q^4+680*q^3+25*q^2"
            "-90*q-27)/(2*(q^2-4*q-1)*(q^2+1)*u^3)",
            "1/2 + (3*q^10-24*q^9+93*q^8-216*q^7+446*q^6+320*q^5-1342*q^4+2824*q^3"
            "+527*q^2-312*q-207)/(6*(q^2-4*q-1)*(q^4-2*q^3+8*q^2+10*q+23)*(q^2+1)*u)",
            {"boalch-51"},
        },
        {
            "boalch-47",
            "icosahedral class 47, hyperelliptic (q,V) form",
            "1/2 1/2 1/3 4/5",
            30, 2,
            "q",
            {{"V", "-(q^2+1)*(q^2+5)*(q^2-4)"}},
            {},
            "1/2 - (q^14+17*q^12+111*q^10+370*q^8+815*q^6+1077*q^4+169*q^2+32)*V"
            "/(108*q^2*(q^2+1)^3*(q^2+5)^2)",
            "1/2 - (q^2-1)^2*(q^4+7*q^2+16)*(q^4+7*q^2+1)*(q^8+8*q^6+28*q^4+36*q^2-10)"
            "/(6*q*(q^2+1)^2*(q^2+2)*(q^2+5)*(q^8+8*q^6+60*q^4+176*q^2-2))"
            " - (5*q^14+85*q^12+555*q^10+1715*q^8+2590*q^6+1902*q^4+1574*q^2+322)*V"
            "/(6*(q^2+1)^2*(q^2+2)*(q^2+5)*(q^8+8*q^6+60*q^4+176*q^2-2))",
            {},
        },
        {
            "boalch-47-sibling",
            "second class-47 solution, from the conjugated class-39 seed",
            "1/2 1/2 1/5 1/3",
            30, 2,
            "q",
            {{"V", "-(q^2+1)*(q^2+5)*(q^2-4)"}},
            {},
            "1/2 - (q^14+17*q^12+111*q^10+370*q^8+815*q^6+1077*q^4+169*q^2+32)*V"
            "/(108*q^2*(q^2+1)^3*(q^2+5)^2)",
            "1/2 + (3*q^14+51*q^12-6*q^11+337*q^10-84*q^9+1168*q^8-366*q^7+2767*q^6"
            "-534*q^5+3821*q^4-276*q^3+413*q^2-30*q+80)*V"
            "/(8*q*(q^2+1)*(q^2+5)*(q^10+10*q^8-45*q^7+25*q^6-315*q^5+35*q^4-495*q^3"
            "+80*q^2-225*q+11))",
            {},
        },
        {
            "boalch-48",
            "icosahedral class 48 on the class-47 curve",
            "1/2 1/2 2/5 2/3",
            30, 2,
            "q",
            {{"V", "-(q^2+1)*(q^2+5)*(q^2-4)"}},
            {{"K0", "63*q^7-806*q^6-1327*q^5-3322*q^4-2295*q^3-926*q^2-260*q-160"}},
            "1/2 - (q^14+17*q^12+111*q^10+370*q^8+815*q^6+1077*q^4+169*q^2+32)*V"
            "/(108*q^2*(q^2+1)^3*(q^2+5)^2)",
            "1/2 + (q^15+2*q^14+17*q^13+30*q^12+103*q^11+154*q^10+242*q^9+276*q^8+K0)"
            "/(12*q*(q^2+1)*(4*q^5+7*q^4+28*q^3+34*q^2+34*q+7)*V)",
            {},
        },
        {
            "boalch-49",
            "icosahedral class 49, hyperelliptic parametrization over Q(sqrt 5)",
            "1/2 1/2 1/3 1/3",
            36, 3,
            "q",
            {{"c5", "5"}, {"v", "3*(q^4+14*q^2+1)*(5*q^4+6*q^2+5)"}},
            {{"K1", "200*q^16+1367*q^14+4835*q^12+3643*q^10-1609*q^8+2933*q^6"
                    "+4025*q^4+825*q^2+165"},
             {"K2", "35*q^12+450*q^10+1097*q^8+1324*q^6+805*q^4+370*q^2+15"}},
            "1/2 + q*(1125*q^16+7000*q^14+26124*q^12+11112*q^10-25186*q^8+11112*q^6"
            "+26124*q^4+7000*q^2+1125)/((q^2-1)*(5*q^4+6*q^2+5)*v^3)",
            "1/2 + (8*q*K1 + c5*(q^2-1)*(q^2+1)*(3*q^2+1)*(q^2+3)*(q^4+14*q^2+1)"
            "*(5*q^6+53*q^4-9*q^2+15))"
            "/(4*v*(q^2-1)*(K2 + 8*c5*q*(q^2-1)*(q^2+1)^2*(3*q^2+1)*(q^2+3)))",
            {"boalch-52"},
        },
        {
            "boalch-50",
            "icosahedral class 50 on the quartic p,r curve",
            "1/2 1/2 1/2 4/5",
            40, 3,
            "q",
            {{"P", "-(2*q+1)*(q^2-2*q+5)"}, {"R", "-q*(q-2)*(q^2-2*q+5)"}},
            {{"p", "P/(q^2-2*q+5)"},
             {"r", "R/(q^2-2*q+5)"},
             {"K3", "440*p^4+200*p^2*r^2+952*p^2+760*r^2+4*q^5-22*q^4+15*q^3"
                    "+66*q^2+89*q+174"}},
            "1/2 - (32*p^6+32*p^4*r^2+56*p^4+64*p^2*r^2-4*p^2-68*r^2+q^4-4*q^3"
            "-6*q^2+20*q-3)/(16*p^3*r*q*(q-2)^2)",
            "1/2 + p*(r*K3 - 40*p^4-200*p^2*r^2+355*r^2+261*p^2+2*q^5-6*q^4-15*q^3"
            "+23*q^2-33*q+52)/(q*(q-2)*(2*q+1)*(3*p^2+r^2+2*r+1)"
            "*(5*r^3+7*p^2*r-3*p^2*q+11*p^2+2*r))",
            {},
        },
        {
            "boalch-51",
            "icosahedral class 51 on the class-50 curve",
            "1/2 1/2 1/2 3/5",
            40, 3,
            "q",
            {{"P", "-(2*q+1)*(q^2-2*q+5)"}, {"R", "-q*(q-2)*(q^2-2*q+5)"}},
            {{"p", "P/(q^2-2*q+5)"},
             {"r", "R/(q^2-2*q+5)"},
             {"K4", "p*(q^5-6*q^4+7*q^3+12*q^2-126*q+24)-q^5+6*q^4-4*q^3-24*q^2"
                    "-33*q-30"}},
            "1/2 - (32*p^6+32*p^4*r^2+56*p^4+64*p^2*r^2-4*p^2-68*r^2+q^4-4*q^3"
            "-6*q^2+20*q-3)/(16*p^3*r*q*(q-2)^2)",
            "1/2 - (120*p^5+200*p^3*r^2-120*p^4-200*p^2*r^2+132*p^3+460*p*r^2"
            "-180*p^2-100*r^2+K4)/(2*r*(2*q+1)*(24*p^3+40*p*r^2-48*p^2-80*r^2"
            "+2*p*q^2+12*p*q+2*p-7*q^2-2*q-11))",
            {},
        },
        {
            "boalch-52",
            "icosahedral class 52, genus-7 curve over Q(sqrt 5)",
            "1/2 1/2 1/2 2/3",
            72, 7,
            "q",
            {{"c5", "5"},
             {"P", "2*(q^2-5)*(3*q^2+1)*(q^2+1)"},
             {"R", "-2*(5*q^2-1)*(q^2+3)*(q^2+1)"}},
            {{"p", "P/(2*(q-c5)*(q^2+1))"},
             {"r", "R/(2*(c5*q+1)*(q^2+1))"},
             {"K5", "(96*q^2*r^6-17256*p^4*q^4+288*r^6-4992*p^4*r^2-14400*p^6"
                    "-2175*q^6-5504*p^2*r^2-1752*p^4-39859*q^4+51136*p^2-6805*q^2"
                    "+25703 - 5*r*(3360*p^6*q^2+5312*p^4*q^4-1024*r^4*q^4+6240*p^6"
                    "+12768*p^4*q^2-285*q^6+5600*p^4-2088*r^2*q^2+8319*q^4-504*r^2"
                    "-4819*q^2+1))/(c5*q)"},
             {"K6", "(228*q^2*r^4-16*r^2*q^2-228*p^2*r^2-148*p^2-56*r^2-369*q^2"
                    "-281 - 20*r*(3*r^2*q^2+12*p^2+5*r^2+11*q^2+9))/(c5*q)"}},
            "1/2 - (p^2+r^2-1)*(p^8-7*p^6*r^2-24*p^4*r^4-7*p^2*r^6+r^8+6*p^4*r^2"
            "+6*p^2*r^4+14*p^4+p^2*r^2+14*r^4+16*p^2+16*r^2+17)"
            "/(96*p^3*r^3*(p^2+r^2+1))",
            "1/2 + (K5 - 4800*p^6-28160*p^4+8704*q^2*r^2-6240*q^4-60352*p^2"
            "-9736*q^2-7288 - 5*r*(966*q^4-512*r^2+608*q^2-982))"
            "/(4*c5*p*r^2*(q+c5)*(c5*q+1)^2*(K6-60*p^2-48*q^2+22"
            "-20*r*(p^2*q^2+3*p^2+4)))",
            {},
        },
    };
    return sources;
}

}  // namespace pvi::detail
