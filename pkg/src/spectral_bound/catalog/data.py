"""Certified edge data: graph6 strings with their expected characteristic polynomials."""

GRAPH6 = {
    "heawood": "MhEGHC@AI?_PC@_G_",
    "pappus": "QhEGGD@?G__P?@G?_GGO@?CE?AG",
    "mcgee": "WhCGGD@?G?`@_@??_GG_@??C?GGC?H??C?@@?C?GG??o?@@",
    "tutte_coxeter": "]hCGGC@GG?_@?@A?_?G@@??E??GG?G?OC??@??GI???_O?@?@?@??A?a???G??@@?O??E?A??G",
    "tutte_12cage": (
        "~?@}hCGGC@?G?_@?@??_?G?@??E??G??G??C@?@???G???_??@??O@????_???G???@O???C"
        "????G????G????C?C??@?????G?????_??O?@?????@??????_???G?G?????@@?????C???"
        "???G????A?G??????C??????@???????G??A????_??????@???????@????????_????_??"
        "G???????@????????C?????A??G????????G????????C??????@?@?????????G???G????"
        "?_????????@????????O@??????????_A????????G?????????@??????O???C?????????"
        "?G??????????G??????????C???????C??@??_????????G_??????????_????????O?@??"
        "?????????@????????????_?????????G?G??O????????@??????@?????C????????????"
        "G??????????A?G????????????C????O???????@?G???????????G????????A????_????"
        "????????@??C??????????@??????????????_??????????_??G????C????????@???C??"
        "????????C???????????A??G??????????????G??????????????C????????????@?@???"
        "??A?????????G?????????G?????`??????????????@??????????????O@????????????"
        "????_??????A????????G???@???????????@????????????O???C????????????????G?"
        "????_??????????G????????????????C?????????????C??@????????_????????G????"
        "??_??????????_??????????????O?@?????????????????@?A????????????????_????"
        "???????????G?G????????O????????@????????????@?????C???G??????????????G??"
        "??????????????A?H??????????????????C??????????O???????@???????G?????????"
        "??G??????????????A????_?C????????????????@????????C??????????@?_????????"
        "??????????_????????????????_??G??????????C????????@?????????C??????????E"
        "?????????????????A??G"
    ),
    "gewirtz": (
        "w?_A??O?OGC???D??Oc?_?I?H?B???B@?CECGAC?_cCOOP???[?Q?O?GH??@P????a@Ac`AG"
        "B??i?H_?AMgA?_Aa_P?cOC?oD?`??U?EG?_B?QO?BCI_??I?b_??Dm?????@O?`cBgGCGI`S"
        "O??vASO_?t?Ab@`?aCQABOC_CGLOoD?EA@OJ?AG_AhEG?B_?U@gG?GcR??M_?Q@Co?q_?EHg"
        "??YO??HGLBW???B@@gwO???BooBK?????V]c??????"
    ),
    "m22_graph": (
        "~?@L@?C??K?_?C????@_g?_C?EA?G?Q??Aa?CH?O@@_OO_OGA?S?I?Og_?DA??DG????CgEE"
        "?AAa_?X?J?_OEA`G@GCOP?DOGC@GAS?AE?E_?Wo?I??@`E_??CKP_???sBG????PAATDCCAG"
        "S`IOOCICcMA?_d?cP_P?C`gh?o?WAGPW?SG@KQ`?KD?G`_I?D_?U@gG?Gag_?N???Ee_?kO?"
        "C`AS?Sc???ySCk????cPEN????DO@ra????Ey{??????@@I??oLOIu?_OacdHHGo@AGLQEQE"
        "E?CBIAoQFGgG?AhQECciO?_KKGYI`DOC?ChGcghBGAGg?WI@dAs?u??WA_Z?Z??SQE?AiG[I"
        "?COLO?AkBKW??fW??X_M_K??HSSbO?CVO??dOQEW??rW??@[SAk??R`_??[FMO??@tO???`B"
        "CoyHk?????EEWDTEw?????SMOFO]I?????B]Aw?]W??????ShjzK????????"
    ),
    "higman_sims": (
        "~?@csaCCA?_C?O?_?_?O?C??_?A??C??C??A???_??C???Dp_?SiO?CFg?HkA?HaI_?GYI??"
        "?rWCACHo?AScG?ps?c?CAHX???MAWA?B@B_??WH__?BF?o_A_CQKOC?_ESc?@_SSA`?C?CwE"
        "?Q??QqA?DC?k_a?Oc?gApA?GKPAaOCCG?bCIGC@?CA`gS?I?@PGo`P??AgAoSG??G?Iwh???"
        "?Fg@?@I@`OOwH?@@PP_WO_?X?J@cCP@?_KD?W`PC_C_P?CESaG?i@?CGKh?Q?d???YT@B?BO"
        "?DG?sWo?I??U@?WBAL???HGOWOpE????PCkE_X???@p_?_CO_dPPPDOCA@CIOdGEa_OOCICc"
        "M?QKOc@@I@Gb@?UG`C?QEac?@OsU?B?PAJ?QAGcDA?RCgO@G?seA_COoD?AO_qD_?U@gG?Wo"
        "?SPDP??]???JCS?YY?Ap??A?LIcGQ_Ac_??iO@_Md@J????A_SKQGbF_???@?_KtO@ra????"
        "??cFltw??????@Ic?SCg?B?t?jWZ?_GCACSchHHE@A[A?OaBS`c``_hGOOA@d@WHBcSL?H@G"
        "?AhQECciOOR@A@?WWOsTAI_GgDAO?QcaQacK_@AaPPD?B@OKgU_??D[\\_?E?gEoEo??`oQIH"
        "B?@TCMD?@?o`KOLO?AkBKW?@_OEPMo??r?\\?W??PS@OdPQL??P\\???OPCkiAOr??EZ???P_?"
        "iVD?j??CwW???A?r]BfG???yg???I?QB`BCoyHk??????eAEKKoIiLo??????WOfOx?\\@wg?"
        "????@_?jZoV?Br??????@?H@tIY}r????????"
    ),
    "yu_graph": "O}GWWC@?W@?A?A?A_?o?J",
    "fig_sqrt5": "G}`Hxw",
    "fig_onept9": "QsP@@?OC?T@?@S@??OGAG?GS?S_",
}

CHARPOLY = {
    "heawood": "(x-3)(x+3)(x^2-2)^6",
    "pappus": "(x-3)(x)^4(x+3)(x^2-3)^6",
    "mcgee": "(x-3)(x-2)^3(x)^3(x+1)^2(x+2)(x^2+x-4)(x^3+x^2-4x-2)^4",
    "tutte_coxeter": "(x-3)(x-2)^9(x)^10(x+2)^9(x+3)",
    "tutte_12cage": "(x-3)(x)^28(x+3)(x^2-6)^21(x^2-2)^27",
    "gewirtz": "(x-10)(x-2)^35(x+4)^20",
    "m22_graph": "(x-16)(x-2)^55(x+6)^21",
    "higman_sims": "(x-22)(x-2)^77(x+8)^22",
    "yu_graph": "(x-3)(x)(x+1)^2(x+2)^2(x^2-x-1)(x^2+x-1)(x^6-3x^5-7x^4+21x^3+13x^2-35x-4)",
    "fig_sqrt5": "(x-4)(x)^4(x+2)(x^2+2x-4)",
    "fig_onept9": "(x-3)(x-1)(x+2)^2(x^2-x-1)^4(x^3+2x^2-4x-6)^2",
}
